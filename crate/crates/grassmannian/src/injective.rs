//! The injective module J = ⊕ I_i ⊗ V_i with basis labelled by paths of Ξ.

use algebra_core::{int, Matrix, Path, QuotientAlgebraBasis, VertexId};
use framed::FramingVector;
use num_traits::Zero;
use rep_core::Representation;

/// A basis vector τ*⁽ᵖ⁾ of J_i: the dual of basis path τ from i, in copy p of V_target(τ).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub path: Path,
    pub copy: usize,
}

impl Label {
    pub fn summand(&self) -> VertexId {
        self.path.target
    }
}

/// Per-vertex label lists; `labels[i - 1]` enumerates the basis of J_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveLabeling {
    pub labels: Vec<Vec<Label>>,
}

impl InjectiveLabeling {
    pub fn at(&self, v: VertexId) -> &[Label] {
        &self.labels[v - 1]
    }

    pub fn position(&self, v: VertexId, label: &Label) -> Option<usize> {
        self.labels[v - 1].iter().position(|l| l == label)
    }

    /// Indices of the labels at v whose path is the trivial path e_v.
    pub fn trivial_positions(&self, v: VertexId) -> Vec<usize> {
        (0..self.labels[v - 1].len()).filter(|&k| self.labels[v - 1][k].path.is_trivial()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct InjectiveModule {
    pub rep: Representation,
    pub labels: InjectiveLabeling,
    pub basis: QuotientAlgebraBasis,
    pub zeta: FramingVector,
}

impl InjectiveModule {
    pub fn dims(&self) -> &[usize] {
        self.rep.dims()
    }

    /// "V{j}" for a trivial path, "V{j}^(τ)" otherwise.
    pub fn summand_name(&self, path: &Path) -> String {
        if path.is_trivial() {
            format!("V{}", path.target)
        } else {
            format!("V{}^({})", path.target, self.basis.quiver().path_name(path))
        }
    }

    pub fn label_name(&self, label: &Label) -> String {
        format!("{}[{}]", self.summand_name(&label.path), label.copy)
    }
}

/// Builds J with a·φ = φ(− · a): the entry at row (λ, p), column (τ, p) of J_a is the τ-coefficient of nf(λa).
pub fn build_injective(basis: &QuotientAlgebraBasis, zeta: &FramingVector) -> InjectiveModule {
    let q = basis.quiver();
    let labels: Vec<Vec<Label>> = q
        .vertices()
        .map(|v| {
            basis
                .basis_from(v)
                .into_iter()
                .flat_map(|path| (1..=zeta[path.target - 1]).map(move |copy| Label { path: path.clone(), copy }))
                .collect()
        })
        .collect();
    let labeling = InjectiveLabeling { labels };
    let dims: Vec<usize> = labeling.labels.iter().map(Vec::len).collect();
    let matrices = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let rows = labeling.at(a.head);
            let cols = labeling.at(a.tail);
            let mut m = Matrix::zeros(rows.len(), cols.len());
            for (r, lambda) in rows.iter().enumerate() {
                let Some(composite) = algebra_core::compose_paths(&lambda.path, &q.arrow_path(k)) else { continue };
                let nf = basis.normal_form_path(&composite);
                for (c, tau) in cols.iter().enumerate() {
                    if tau.copy == lambda.copy && tau.path.target == lambda.path.target {
                        let x = nf.coefficient(&tau.path);
                        if !x.is_zero() {
                            m.set(r, c, x);
                        }
                    }
                }
            }
            m
        })
        .collect();
    let rep = Representation::new(q.clone(), dims, matrices).expect("J has consistent shapes");
    InjectiveModule { rep, labels: labeling, basis: basis.clone(), zeta: zeta.clone() }
}

/// Unit vectors of J_v at the given label positions.
pub fn label_span(j: &InjectiveModule, v: VertexId, positions: &[usize]) -> Matrix {
    let d = j.rep.dim(v);
    Matrix::from_fn(d, positions.len(), |r, c| if positions[c] == r { int(1) } else { int(0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::{build_quotient_basis, catalog};

    #[test]
    fn nakayama_dimensions() {
        let (q, rho) = catalog::nakayama_chain();
        let b = build_quotient_basis(&q, &rho).unwrap();
        let j = build_injective(&b, &vec![1, 2, 3]);
        assert_eq!(j.dims(), &[3, 5, 3]);
        assert!(j.rep.check_relations(&rho).unwrap());
    }

    #[test]
    fn truncated_polynomial_shift() {
        let (q, rho) = catalog::truncated_loop(3);
        let b = build_quotient_basis(&q, &rho).unwrap();
        let j = build_injective(&b, &vec![1]);
        // Labels e, a, aa: a·e* = 0, a·a* = e*, a·aa* = a*.
        assert_eq!(j.rep.matrix(0), &Matrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]));
        assert_eq!(j.summand_name(&j.labels.at(1)[2].path), "V1^(aa)");
    }
}
