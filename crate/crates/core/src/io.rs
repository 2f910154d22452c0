//! File formats: Matrix Market coordinate files, tab-separated edge lists,
//! tab-separated incidence lists and label dictionaries.
//!
//! Matrix Market indices are 1-based on disk and 0-based in memory. Every
//! reader reports the 1-based line number of the first malformed line and
//! returns nothing on error.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::algebra::{Scalar, ScalarDomain};
use crate::error::{Error, Result};
use crate::graphrep::{Edge, HyperEdge};
use crate::matrix::Triples;

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path).map(BufReader::new).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MmField {
    Real,
    Integer,
    Pattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MmSymmetry {
    General,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MmHeader {
    pub field: MmField,
    pub symmetry: MmSymmetry,
}

fn parse_header(line: &str) -> Result<MmHeader> {
    let tokens: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(Error::parse(1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'"));
    }
    if tokens[1] != "matrix" || tokens[2] != "coordinate" {
        return Err(Error::parse(1, format!("unsupported format '{} {}'; only 'matrix coordinate' is read", tokens[1], tokens[2])));
    }
    let field = match tokens[3].as_str() {
        "real" | "double" => MmField::Real,
        "integer" => MmField::Integer,
        "pattern" => MmField::Pattern,
        other => return Err(Error::parse(1, format!("unsupported field '{other}'"))),
    };
    let symmetry = match tokens[4].as_str() {
        "general" => MmSymmetry::General,
        "symmetric" => MmSymmetry::Symmetric,
        other => return Err(Error::parse(1, format!("unsupported symmetry '{other}'"))),
    };
    Ok(MmHeader { field, symmetry })
}

fn parse_index(token: &str, bound: usize, what: &str, line: usize) -> Result<usize> {
    let i: u64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} index {token:?} is not a positive integer")))?;
    if i == 0 || i > bound as u64 {
        return Err(Error::parse(line, format!("{what} index {i} outside 1..={bound}")));
    }
    Ok(i as usize - 1)
}

/// Reads a coordinate Matrix Market stream. Symmetric files are expanded
/// to both triangles; pattern files get value 1.
pub fn parse_matrix_market<R: Read>(reader: R) -> Result<(MmHeader, Triples<f64>)> {
    let mut lines = BufReader::new(reader).lines().enumerate().map(|(k, l)| (k + 1, l));
    let header = match lines.next() {
        Some((_, Ok(l))) => parse_header(&l)?,
        Some((n, Err(e))) => return Err(Error::parse(n, e.to_string())),
        None => return Err(Error::parse(1, "empty file")),
    };
    let mut size: Option<(usize, usize, usize)> = None;
    let mut t = Triples::new(0, 0);
    let mut seen = 0usize;
    let mut last_line = 1;
    for (n, line) in lines {
        last_line = n;
        let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('%') {
            continue;
        }
        let tok: Vec<&str> = body.split_whitespace().collect();
        let Some((nrows, ncols, nnz)) = size else {
            if tok.len() != 3 {
                return Err(Error::parse(n, "expected size line 'rows cols entries'"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(n, format!("size {s:?} is not an integer")));
            let dims = (num(tok[0])?, num(tok[1])?, num(tok[2])?);
            if header.symmetry == MmSymmetry::Symmetric && dims.0 != dims.1 {
                return Err(Error::parse(n, "symmetric matrix must be square"));
            }
            size = Some(dims);
            t = Triples::new(dims.0, dims.1);
            continue;
        };
        let want = if header.field == MmField::Pattern { 2 } else { 3 };
        if tok.len() != want {
            return Err(Error::parse(n, format!("expected {want} fields, found {}", tok.len())));
        }
        if seen == nnz {
            return Err(Error::parse(n, format!("more than the declared {nnz} entries")));
        }
        let i = parse_index(tok[0], nrows, "row", n)?;
        let j = parse_index(tok[1], ncols, "column", n)?;
        let v = match header.field {
            MmField::Pattern => 1.0,
            MmField::Integer => tok[2]
                .parse::<i64>()
                .map_err(|_| Error::parse(n, format!("value {:?} is not an integer", tok[2])))? as f64,
            MmField::Real => tok[2]
                .parse::<f64>()
                .map_err(|_| Error::parse(n, format!("value {:?} is not a number", tok[2])))?,
        };
        t.push(i, j, v);
        if header.symmetry == MmSymmetry::Symmetric && i != j {
            t.push(j, i, v);
        }
        seen += 1;
    }
    match size {
        None => Err(Error::parse(last_line, "missing size line")),
        Some((_, _, nnz)) if seen != nnz => Err(Error::parse(last_line, format!("declared {nnz} entries but found {seen}"))),
        Some(_) => Ok((header, t)),
    }
}

pub fn read_matrix_market(path: impl AsRef<Path>) -> Result<Triples<f64>> {
    let path = path.as_ref();
    parse_matrix_market(open(path)?)
        .map(|(_, t)| t)
        .map_err(|e| e.with_path(path))
}

/// Writes triples as a general coordinate file. The field is `real` for
/// `f64`, `integer` for `i64` and `pattern` for `bool` (only `true` entries
/// are written).
pub fn format_matrix_market<T: Scalar, W: Write>(t: &Triples<T>, mut out: W) -> std::io::Result<()> {
    let field = match T::DOMAIN {
        ScalarDomain::F64 => "real",
        ScalarDomain::I64 => "integer",
        ScalarDomain::Bool => "pattern",
    };
    writeln!(out, "%%MatrixMarket matrix coordinate {field} general")?;
    if T::DOMAIN == ScalarDomain::Bool {
        let kept: Vec<_> = t.iter().filter(|(_, _, v)| v.to_bits() != 0).collect();
        writeln!(out, "{} {} {}", t.nrows, t.ncols, kept.len())?;
        for (i, j, _) in kept {
            writeln!(out, "{} {}", i + 1, j + 1)?;
        }
    } else {
        writeln!(out, "{} {} {}", t.nrows, t.ncols, t.len())?;
        for (i, j, v) in t.iter() {
            writeln!(out, "{} {} {}", i + 1, j + 1, v)?;
        }
    }
    out.flush()
}

pub fn write_matrix_market<T: Scalar>(path: impl AsRef<Path>, t: &Triples<T>) -> Result<()> {
    let path = path.as_ref();
    format_matrix_market(t, create(path)?).map_err(io_err(path))
}

/// Parses `src<TAB>dst[<TAB>weight]` lines. Blank lines and lines starting
/// with `#` are skipped; the default weight is 1.
pub fn parse_tsv_edges<R: Read>(reader: R) -> Result<Vec<Edge<f64>>> {
    let mut edges = Vec::new();
    for (k, line) in BufReader::new(reader).lines().enumerate() {
        let n = k + 1;
        let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let weight = match fields.len() {
            2 => 1.0,
            3 => fields[2]
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::parse(n, format!("weight {:?} is not a number", fields[2])))?,
            k => return Err(Error::parse(n, format!("expected 2 or 3 tab-separated fields, found {k}"))),
        };
        if fields[0].is_empty() || fields[1].is_empty() {
            return Err(Error::parse(n, "empty vertex label"));
        }
        edges.push(Edge::new(fields[0], fields[1], weight));
    }
    Ok(edges)
}

pub fn read_tsv_edges(path: impl AsRef<Path>) -> Result<Vec<Edge<f64>>> {
    let path = path.as_ref();
    parse_tsv_edges(open(path)?).map_err(|e| e.with_path(path))
}

/// Parses `edge<TAB>tail<TAB>head[<TAB>head...]` lines into incidence edges.
pub fn parse_tsv_incidence<R: Read>(reader: R) -> Result<Vec<HyperEdge>> {
    let mut edges = Vec::new();
    for (k, line) in BufReader::new(reader).lines().enumerate() {
        let n = k + 1;
        let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 3 {
            return Err(Error::parse(n, format!("expected 'edge, tail, head...' (at least 3 fields), found {}", fields.len())));
        }
        if fields.iter().any(|f| f.is_empty()) {
            return Err(Error::parse(n, "empty label"));
        }
        edges.push(HyperEdge {
            label: fields[0].to_string(),
            tail: fields[1].to_string(),
            heads: fields[2..].iter().map(|h| h.to_string()).collect(),
        });
    }
    Ok(edges)
}

pub fn read_tsv_incidence(path: impl AsRef<Path>) -> Result<Vec<HyperEdge>> {
    let path = path.as_ref();
    parse_tsv_incidence(open(path)?).map_err(|e| e.with_path(path))
}

/// Writes a `label<TAB>index` dictionary file.
pub fn write_labels(path: impl AsRef<Path>, labels: &crate::graphrep::LabelDict) -> Result<()> {
    let path = path.as_ref();
    let mut out = create(path)?;
    labels.write_tsv(&mut out).and_then(|_| out.flush()).map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Triples<f64>> {
        parse_matrix_market(s.as_bytes()).map(|(_, t)| t)
    }

    #[test]
    fn one_based_conversion() {
        let t = parse("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 1\n1 2 7\n").unwrap();
        assert_eq!((t.i, t.j, t.v), (vec![0], vec![1], vec![7.0]));
    }

    #[test]
    fn symmetric_expansion() {
        let t = parse("%%MatrixMarket matrix coordinate integer symmetric\n2 2 2\n2 1 5\n1 1 3\n").unwrap();
        assert_eq!(t.iter().map(|(i, j, &v)| (i, j, v)).collect::<Vec<_>>(), vec![(1, 0, 5.0), (0, 1, 5.0), (0, 0, 3.0)]);
    }

    #[test]
    fn pattern_field() {
        let t = parse("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n3 1\n").unwrap();
        assert_eq!(t.v, vec![1.0, 1.0]);
    }

    #[test]
    fn malformed_inputs_report_lines() {
        let cases = [
            ("%%MatrixMarket matrix array real general\n2 2\n", 1),
            ("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n", 3),
            ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n", 3),
            ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n", 3),
            ("%%MatrixMarket matrix coordinate real general\n2 x 1\n", 2),
            ("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1\n2 2 2\n", 4),
            ("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 1 1.5\n", 3),
            ("%%MatrixMarket matrix coordinate real general\n2 2 1\n99999999999999999999999 1 1\n", 3),
        ];
        for (text, want) in cases {
            match parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse("").is_err());
        assert!(parse("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n").is_err());
    }

    #[test]
    fn write_then_read() {
        let mut t = Triples::new(3, 2);
        t.push(2, 1, 0.1);
        t.push(0, 0, -3.5e-7);
        let mut buf = Vec::new();
        format_matrix_market(&t, &mut buf).unwrap();
        assert_eq!(parse(std::str::from_utf8(&buf).unwrap()).unwrap(), t);

        let mut b = Triples::new(2, 2);
        b.push(0, 1, true);
        b.push(1, 0, false);
        let mut buf = Vec::new();
        format_matrix_market(&b, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n");
    }

    #[test]
    fn tsv_edges() {
        let e = parse_tsv_edges("alice\tbob\nalice\tcarl\n".as_bytes()).unwrap();
        assert_eq!(e, vec![Edge::new("alice", "bob", 1.0), Edge::new("alice", "carl", 1.0)]);
        assert!(parse_tsv_edges("".as_bytes()).unwrap().is_empty());
        assert_eq!(parse_tsv_edges("a\tb\t2.5\n".as_bytes()).unwrap()[0].weight, 2.5);
        match parse_tsv_edges("a\tb\n\nc\n".as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_tsv_edges("a\tb\tx\n".as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tsv_incidence() {
        let e = parse_tsv_incidence("e0\tv1\tv2\tv3\ne1\tv2\tv1\n".as_bytes()).unwrap();
        assert_eq!(e[0], HyperEdge::new("e0", "v1", &["v2", "v3"]));
        assert!(parse_tsv_incidence("e0\tv1\n".as_bytes()).is_err());
    }
}
