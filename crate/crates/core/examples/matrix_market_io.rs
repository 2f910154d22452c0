//! Writing and reading Matrix Market coordinate files.

use graphblas::io::{format_matrix_market, parse_matrix_market, read_matrix_market, write_matrix_market};
use graphblas::matrix::{find, sparse_build, Triples};

fn main() -> graphblas::Result<()> {
    let t = Triples::from_vecs(3, 4, vec![0, 2, 1, 2], vec![1, 3, 0, 3], vec![2.5, 1.0, -4.0, 0.5])?;
    // The two (2,3) entries combine on build.
    let a = sparse_build(&t, |x, y| x + y)?;

    let mut text = Vec::new();
    format_matrix_market(&find(&a), &mut text).expect("writing to a Vec cannot fail");
    println!("{}", String::from_utf8_lossy(&text));

    let path = std::env::temp_dir().join("graphblas-example.mtx");
    write_matrix_market(&path, &find(&a))?;
    let back = read_matrix_market(&path)?;
    println!("read back {}x{} with {} entries from {}", back.nrows, back.ncols, back.len(), path.display());

    let symmetric = "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n";
    let (header, s) = parse_matrix_market(symmetric.as_bytes())?;
    println!("\n{header:?} expands to {} entries", s.len());

    let broken = "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 3 1.0\n";
    println!("error: {}", parse_matrix_market(broken.as_bytes()).unwrap_err());
    Ok(())
}
