use algebra_core::{int, Matrix};
use rep_core::{socle, Representation};

use crate::framed_rep::{is_stable, FramedRep, FramingVector};

/// Extends independent columns to a basis by appending standard vectors.
fn extend_to_basis(columns: &Matrix) -> Matrix {
    let n = columns.rows();
    let mut basis = columns.clone();
    for e in 0..n {
        if basis.cols() == n {
            break;
        }
        let unit = Matrix::from_fn(n, 1, |i, _| int(i64::from(i == e)));
        let candidate = Matrix::hstack(&[&basis, &unit], n);
        if candidate.rank() == candidate.cols() {
            basis = candidate;
        }
    }
    basis
}

/// Whether some framing f with dim V = ζ makes (M, f) stable: exactly when ζ_i ≥ dim (soc M)_i.
///
/// The witness projects onto soc M along a standard complement and embeds soc M into V.
pub fn framing_existence(m: &Representation, zeta: &FramingVector) -> (bool, Option<FramedRep>) {
    let soc = socle(m);
    let fits = soc.dims().iter().zip(zeta).all(|(s, z)| s <= z);
    if !fits {
        return (false, None);
    }
    let framing = m
        .quiver()
        .vertices()
        .map(|v| {
            let s = soc.at(v);
            let basis = extend_to_basis(s);
            let coords = basis.inverse().expect("extended basis is invertible");
            let projection = coords.select_rows(&(0..s.cols()).collect::<Vec<_>>());
            let injection = Matrix::from_fn(zeta[v - 1], s.cols(), |i, j| int(i64::from(i == j)));
            &injection * &projection
        })
        .collect();
    let witness = FramedRep::new(m.clone(), zeta.clone(), framing).expect("witness shapes match");
    debug_assert!(is_stable(&witness));
    (true, Some(witness))
}
