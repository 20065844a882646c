//! Finite-dimensional shadow of Φ: M → ⊕_j J(λ_j, r_j) and its inverse on submodule points.

use algebra_core::{int, Matrix, Poly, Scalar, VertexId};
use framed::FramedRep;
use rep_core::{is_subrepresentation, GradedSubspace, ModuleMap, Representation};

use crate::error::FiberError;
use crate::jlambda::FiberAmbient;
use crate::spec::{char_polys, segment_matrix, tau_matrix, RootData};

/// Projection of M_i onto the generalized λ-eigenspace of τ_i along the other eigenspaces.
pub fn spectral_projection(x: &Representation, i: VertexId, lambda: &Scalar) -> Matrix {
    spectral_projector(&tau_matrix(x, i), lambda)
}

/// Projection onto the generalized λ-eigenspace of a square matrix along its Fitting complement.
pub fn spectral_projector(tau: &Matrix, lambda: &Scalar) -> Matrix {
    let d = tau.rows();
    let shifted = tau - &Matrix::identity(d).scale(lambda);
    let power = shifted.pow(d);
    let kernel = power.kernel();
    let image = power.column_echelon();
    let basis = Matrix::hstack(&[&kernel, &image], d);
    let inverse = basis.inverse().expect("Fitting decomposition spans M_i");
    let keep = Matrix::from_fn(d, d, |r, c| int(i64::from(r == c && r < kernel.cols())));
    &(&basis * &keep) * &inverse
}

/// Row (j, q, copy, s) of Φ_i is row `copy` of f_q·P_{i⇝q}·(τ_i − λ_j)^s·π_{i,j}.
pub fn embed(fr: &FramedRep, ambient: &FiberAmbient) -> Result<ModuleMap, FiberError> {
    let x = fr.rep();
    let n = ambient.spec.n;
    if x.quiver().vertex_count() != n || fr.zeta() != &ambient.spec.zeta {
        return Err(FiberError::VertexCount { expected: n, found: x.quiver().vertex_count() });
    }
    let expected = root_polys(ambient);
    if char_polys(x) != expected {
        return Err(FiberError::InvalidRoots("characteristic polynomials differ from the root data".into()));
    }
    let blocks = (1..=n)
        .map(|i| {
            let d = x.dim(i);
            let tau = tau_matrix(x, i);
            let mut rows = Vec::with_capacity(ambient.dim());
            for c in &ambient.components {
                let pi = spectral_projection(x, i, &c.lambda);
                let shifted = &tau - &Matrix::identity(d).scale(&c.lambda);
                let mut powers = vec![pi];
                for s in 1..c.order {
                    let next = &shifted * &powers[s - 1];
                    powers.push(next);
                }
                for label in &c.labels {
                    let along = &(fr.framing_at(label.q) * &segment_matrix(x, i, label.q)) * &powers[label.s];
                    rows.push(along.row(label.copy - 1).to_vec());
                }
            }
            Matrix::from_rows(rows, d).expect("rows share the width α_i")
        })
        .collect();
    Ok(ModuleMap { blocks })
}

fn root_polys(ambient: &FiberAmbient) -> Vec<Poly> {
    let roots = ambient.components.iter().map(|c| (c.lambda.clone(), c.r.clone())).collect();
    RootData::new(roots).char_polys(ambient.spec.n)
}

/// Recovers (M, f): X_a solves F_head·X = a·F_tail, and f_i sums the rows at (j, i, copy, 0) over j.
pub fn recover(blocks: &[Matrix], ambient: &FiberAmbient) -> Result<FramedRep, FiberError> {
    let n = ambient.spec.n;
    if blocks.len() != n {
        return Err(FiberError::VertexCount { expected: n, found: blocks.len() });
    }
    for (i, b) in blocks.iter().enumerate() {
        if b.rows() != ambient.dim() {
            return Err(FiberError::BlockShape { vertex: i + 1, expected: ambient.dim(), found: b.rows() });
        }
        if b.rank() != b.cols() {
            return Err(FiberError::NotInjective(i + 1));
        }
    }
    if !is_subrepresentation(&GradedSubspace::image_of(blocks), &ambient.rep) {
        return Err(FiberError::NotSubmodule);
    }
    let q = ambient.rep.quiver();
    let mut matrices = Vec::with_capacity(n);
    for (k, a) in q.arrows().iter().enumerate() {
        let moved = ambient.rep.matrix(k) * &blocks[a.tail - 1];
        matrices.push(blocks[a.head - 1].solve(&moved).ok_or(FiberError::NotSubmodule)?);
    }
    let dims = blocks.iter().map(Matrix::cols).collect();
    let rep = Representation::new(q.clone(), dims, matrices)?;
    let framing = (1..=n)
        .map(|i| {
            let zero = Matrix::zeros(ambient.spec.zeta[i - 1], blocks[i - 1].cols());
            ambient
                .framing_positions(i)
                .iter()
                .fold(zero, |acc, rows| &acc + &blocks[i - 1].select_rows(rows))
        })
        .collect();
    Ok(FramedRep::new(rep, ambient.spec.zeta.clone(), framing)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::CyclicQuiverSpec;
    use framed::is_stable;

    #[test]
    fn jordan_block_round_trip() {
        let spec = CyclicQuiverSpec::new(1, vec![2], vec![1]).unwrap();
        let rd = RootData::new(vec![(int(0), vec![2])]);
        let ambient = FiberAmbient::new(&spec, &rd).unwrap();
        let x = Representation::new(spec.quiver(), vec![2], vec![Matrix::from_ints(2, 2, &[0, 0, 1, 0])]).unwrap();
        let fr = FramedRep::new(x, vec![1], vec![Matrix::from_ints(1, 2, &[0, 1])]).unwrap();
        assert!(is_stable(&fr));
        let map = embed(&fr, &ambient).unwrap();
        assert_eq!(map.blocks[0], Matrix::from_ints(2, 2, &[0, 1, 1, 0]));
        assert!(map.is_intertwiner(fr.rep(), &ambient.rep));
        assert_eq!(recover(&map.blocks, &ambient).unwrap(), fr);
    }

    #[test]
    fn diagonal_splits_into_eigenlines() {
        let spec = CyclicQuiverSpec::new(1, vec![2], vec![1]).unwrap();
        let rd = RootData::new(vec![(int(1), vec![1]), (int(2), vec![1])]);
        let ambient = FiberAmbient::new(&spec, &rd).unwrap();
        let x = Representation::new(spec.quiver(), vec![2], vec![Matrix::diagonal(&[int(1), int(2)])]).unwrap();
        let fr = FramedRep::new(x, vec![1], vec![Matrix::from_ints(1, 2, &[1, 1])]).unwrap();
        let map = embed(&fr, &ambient).unwrap();
        assert_eq!(map.blocks[0], Matrix::identity(2));
        assert_eq!(recover(&map.blocks, &ambient).unwrap(), fr);
    }
}
