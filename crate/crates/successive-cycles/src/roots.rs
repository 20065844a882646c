//! Root data for every pasted cycle, and characteristic polynomials of cycle operators.

use algebra_core::{char_poly, Matrix, Poly, Scalar, VertexId};
use cyclic_fibers::{cycle_quiver, root_data_of, validate_root_data, FiberError, RootData};
use num_traits::Zero;
use rep_core::{DimensionVector, Representation};

use crate::decomposition::SuccessiveDecomposition;
use crate::error::SuccessiveError;

/// One RootData per component of the decomposition. Multiplicity vectors of a cycle are indexed by
/// cycle position; a component without a cycle carries the single root 0 with multiplicity α_v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiRootData {
    pub components: Vec<RootData>,
}

impl MultiRootData {
    pub fn new(components: Vec<RootData>) -> Self {
        MultiRootData { components }
    }

    /// Per-vertex dimensions Σ_l r_l.
    pub fn alpha(&self, decomp: &SuccessiveDecomposition) -> DimensionVector {
        (1..=decomp.quiver.vertex_count())
            .map(|v| {
                let t = decomp.position(v);
                self.components[decomp.component_of[v - 1]].roots.iter().map(|(_, r)| r.get(t).copied().unwrap_or(0)).sum()
            })
            .collect()
    }

    /// Multiplicity r_l at vertex v of root l of its component.
    pub fn multiplicity(&self, decomp: &SuccessiveDecomposition, v: VertexId, l: usize) -> usize {
        self.components[decomp.component_of[v - 1]].roots[l].1[decomp.position(v)]
    }

    /// Nilpotency order R_l = max_t r_l at position t.
    pub fn order(&self, component: usize, l: usize) -> usize {
        self.components[component].roots[l].1.iter().copied().max().unwrap_or(0)
    }

    pub fn validate(&self, decomp: &SuccessiveDecomposition) -> Result<(), SuccessiveError> {
        if self.components.len() != decomp.components.len() {
            return Err(SuccessiveError::ComponentCount { expected: decomp.components.len(), found: self.components.len() });
        }
        for (c, (rd, comp)) in self.components.iter().zip(&decomp.components).enumerate() {
            let invalid = |reason: String| SuccessiveError::InvalidRoots { component: c, reason };
            if comp.is_cycle() {
                let alpha: Vec<usize> = (0..comp.cycle_length()).map(|t| rd.roots.iter().map(|(_, r)| r.get(t).copied().unwrap_or(0)).sum()).collect();
                validate_root_data(rd, &alpha).map_err(|e| match e {
                    FiberError::InvalidRoots(reason) => invalid(reason),
                    other => invalid(other.to_string()),
                })?;
            } else if rd.roots.len() != 1 || !rd.roots[0].0.is_zero() || rd.roots[0].1.len() != 1 {
                return Err(invalid("a vertex without a cycle takes the single root 0 with one multiplicity".into()));
            }
        }
        Ok(())
    }

    /// Expected characteristic polynomials, per component and cycle position; empty for acyclic components.
    pub fn char_polys(&self, decomp: &SuccessiveDecomposition) -> Vec<Vec<Poly>> {
        decomp
            .components
            .iter()
            .zip(&self.components)
            .map(|(comp, rd)| if comp.is_cycle() { rd.char_polys(comp.cycle_length()) } else { Vec::new() })
            .collect()
    }

    /// The datum of a vertex without a cycle.
    pub fn degenerate(alpha_v: usize) -> RootData {
        RootData::new(vec![(Scalar::zero(), vec![alpha_v])])
    }
}

/// The representation of the cycle quiver A_{n_c} obtained by restricting x to component c.
pub fn cycle_restriction(x: &Representation, decomp: &SuccessiveDecomposition, c: usize) -> Representation {
    let comp = &decomp.components[c];
    let dims = comp.vertices.iter().map(|&v| x.dim(v)).collect();
    let matrices = comp.cycle_arrows.iter().map(|&k| x.matrix(k).clone()).collect();
    Representation::new(cycle_quiver(comp.cycle_length()), dims, matrices).expect("restriction keeps the shapes")
}

/// τ_v acting on x_v, the identity on vertices that lie on no cycle.
pub fn cycle_operator(x: &Representation, decomp: &SuccessiveDecomposition, v: VertexId) -> Matrix {
    decomp.cycle_at(v).iter().fold(Matrix::identity(x.dim(v)), |acc, &k| x.matrix(k) * &acc)
}

pub fn cycle_char_polys(x: &Representation, decomp: &SuccessiveDecomposition) -> Vec<Vec<Poly>> {
    decomp
        .components
        .iter()
        .map(|comp| {
            if comp.is_cycle() {
                comp.vertices.iter().map(|&v| char_poly(&cycle_operator(x, decomp, v))).collect()
            } else {
                Vec::new()
            }
        })
        .collect()
}

/// Root data read off the cycle operators, sorted by root within each cycle.
pub fn multi_root_data_of(x: &Representation, decomp: &SuccessiveDecomposition) -> Result<MultiRootData, SuccessiveError> {
    let mut components = Vec::with_capacity(decomp.components.len());
    for (c, comp) in decomp.components.iter().enumerate() {
        if comp.is_cycle() {
            let rd = root_data_of(&cycle_restriction(x, decomp, c)).map_err(|e| match e {
                FiberError::IrrationalSpectrum(t) => SuccessiveError::IrrationalSpectrum(comp.vertices[t - 1]),
                other => other.into(),
            })?;
            components.push(rd);
        } else {
            components.push(MultiRootData::degenerate(x.dim(comp.vertices[0])));
        }
    }
    Ok(MultiRootData { components })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::detect_successive;
    use algebra_core::{int, Quiver};

    #[test]
    fn roots_of_a_loop_and_a_free_vertex() {
        let q = Quiver::from_triples(2, &[("a", 1, 1), ("b", 1, 2)]).unwrap();
        let d = detect_successive(&q).unwrap();
        let x = Representation::new(
            q,
            vec![2, 1],
            vec![Matrix::diagonal(&[int(3), int(-1)]), Matrix::from_ints(1, 2, &[1, 1])],
        )
        .unwrap();
        let mrd = multi_root_data_of(&x, &d).unwrap();
        assert_eq!(mrd.components[0].roots, vec![(int(-1), vec![1]), (int(3), vec![1])]);
        assert_eq!(mrd.components[1], MultiRootData::degenerate(1));
        assert_eq!(mrd.alpha(&d), vec![2, 1]);
        assert!(mrd.validate(&d).is_ok());
        assert_eq!(cycle_char_polys(&x, &d), mrd.char_polys(&d));
    }

    #[test]
    fn irrational_cycles_are_reported() {
        let q = Quiver::from_triples(1, &[("a", 1, 1)]).unwrap();
        let d = detect_successive(&q).unwrap();
        let x = Representation::new(q, vec![2], vec![Matrix::from_ints(2, 2, &[0, 2, 1, 0])]).unwrap();
        assert_eq!(multi_root_data_of(&x, &d), Err(SuccessiveError::IrrationalSpectrum(1)));
    }
}
