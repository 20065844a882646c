//! The module map Φ: M → J, its kernel, and recovery of (M, f) from an embedding.

use algebra_core::{span_contains, Matrix};
use framed::FramedRep;
use rep_core::{is_subrepresentation, GradedSubspace, ModuleMap, Representation};

use crate::error::GrassError;
use crate::injective::InjectiveModule;

/// φ_i stacks, for each label (τ: i⇝j, p), row p of f_j·X_τ.
pub fn phi(fr: &FramedRep, j: &InjectiveModule) -> ModuleMap {
    let x = fr.rep();
    let blocks = x
        .quiver()
        .vertices()
        .map(|v| {
            let rows: Vec<Vec<_>> = j
                .labels
                .at(v)
                .iter()
                .map(|label| {
                    let image = fr.framing_at(label.summand()) * &x.path_matrix(&label.path);
                    image.row(label.copy - 1).to_vec()
                })
                .collect();
            Matrix::from_rows(rows, x.dim(v)).expect("rows share the width α_v")
        })
        .collect();
    ModuleMap { blocks }
}

pub fn kernel_phi(fr: &FramedRep, j: &InjectiveModule) -> GradedSubspace {
    GradedSubspace::kernel_of(&phi(fr, j).blocks)
}

/// Column spans of an embedding.
pub fn image_of(embedding: &ModuleMap) -> GradedSubspace {
    GradedSubspace::image_of(&embedding.blocks)
}

/// Recovers (M, f) from injective blocks F_i whose column spans form a submodule of J.
pub fn recover(embedding: &[Matrix], j: &InjectiveModule) -> Result<FramedRep, GrassError> {
    let q = j.rep.quiver();
    if embedding.len() != q.vertex_count() {
        return Err(GrassError::BlockCount { expected: q.vertex_count(), found: embedding.len() });
    }
    for (i, f) in embedding.iter().enumerate() {
        if f.rows() != j.rep.dims()[i] {
            return Err(GrassError::BlockShape { vertex: i + 1, expected: j.rep.dims()[i], found: f.rows() });
        }
        if f.rank() != f.cols() {
            return Err(GrassError::NotInjective(i + 1));
        }
    }
    let dims: Vec<usize> = embedding.iter().map(Matrix::cols).collect();
    let span = GradedSubspace::image_of(embedding);
    if !is_subrepresentation(&span, &j.rep) {
        return Err(GrassError::NotSubmodule);
    }
    let mut matrices = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let target = &embedding[a.head - 1];
        let moved = j.rep.matrix(k) * &embedding[a.tail - 1];
        debug_assert!(span_contains(target, &moved));
        matrices.push(target.solve(&moved).ok_or(GrassError::NotSubmodule)?);
    }
    let rep = Representation::new(q.clone(), dims, matrices).expect("solved shapes match");
    let framing = q
        .vertices()
        .map(|v| embedding[v - 1].select_rows(&j.labels.trivial_positions(v)))
        .collect();
    Ok(FramedRep::new(rep, j.zeta.clone(), framing)?)
}

/// Membership in the Grassmannian of submodules of J.
pub fn grass_membership(u: &GradedSubspace, j: &InjectiveModule) -> bool {
    is_subrepresentation(u, &j.rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::build_injective;
    use algebra_core::{build_quotient_basis, catalog};

    fn jordan_example() -> (FramedRep, InjectiveModule) {
        let (q, rho) = catalog::truncated_loop(3);
        let b = build_quotient_basis(&q, &rho).unwrap();
        let j = build_injective(&b, &vec![1]);
        let m = Representation::new(q, vec![2], vec![Matrix::from_ints(2, 2, &[0, 0, 1, 0])]).unwrap();
        let fr = FramedRep::new(m, vec![1], vec![Matrix::from_ints(1, 2, &[0, 1])]).unwrap();
        (fr, j)
    }

    #[test]
    fn phi_of_jordan_block() {
        let (fr, j) = jordan_example();
        let map = phi(&fr, &j);
        assert_eq!(map.blocks[0], Matrix::from_ints(3, 2, &[0, 1, 1, 0, 0, 0]));
        assert!(map.is_intertwiner(fr.rep(), &j.rep));
        assert!(kernel_phi(&fr, &j).is_zero());
    }

    #[test]
    fn recover_inverts_phi() {
        let (fr, j) = jordan_example();
        let back = recover(&phi(&fr, &j).blocks, &j).unwrap();
        assert_eq!(back, fr);
    }

    #[test]
    fn zero_framing_has_full_kernel() {
        let (fr, j) = jordan_example();
        let zero = FramedRep::zero_framing(fr.rep().clone(), vec![1]).unwrap();
        assert!(phi(&zero, &j).blocks.iter().all(Matrix::is_zero));
        assert_eq!(kernel_phi(&zero, &j), GradedSubspace::full(vec![2]));
    }

    #[test]
    fn recover_rejects_bad_embeddings() {
        let (_, j) = jordan_example();
        let not_injective = Matrix::from_ints(3, 2, &[1, 1, 0, 0, 0, 0]);
        assert_eq!(recover(&[not_injective], &j), Err(GrassError::NotInjective(1)));
        let not_sub = Matrix::from_ints(3, 1, &[0, 0, 1]);
        assert_eq!(recover(&[not_sub], &j), Err(GrassError::NotSubmodule));
        let empty = recover(&[Matrix::zeros(3, 0)], &j).unwrap();
        assert_eq!(empty.dims(), &vec![0]);
    }
}
