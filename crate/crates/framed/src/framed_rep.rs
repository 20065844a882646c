use algebra_core::{Matrix, VertexId};
use rand::Rng;
use rep_core::{maximal_submodule_in, random_matrix, DimensionVector, GradedSubspace, Representation};

use crate::error::FramedError;

/// Dimensions ζ_i of the framing spaces V_i.
pub type FramingVector = Vec<usize>;

/// A representation M with a graded linear map f: M → V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedRep {
    rep: Representation,
    zeta: FramingVector,
    framing: Vec<Matrix>,
}

impl FramedRep {
    /// `framing[i - 1]` is f_i, of shape ζ_i × α_i.
    pub fn new(rep: Representation, zeta: FramingVector, framing: Vec<Matrix>) -> Result<Self, FramedError> {
        let n = rep.quiver().vertex_count();
        if zeta.len() != n {
            return Err(FramedError::VertexCount { expected: n, found: zeta.len() });
        }
        if framing.len() != n {
            return Err(FramedError::VertexCount { expected: n, found: framing.len() });
        }
        for (i, f) in framing.iter().enumerate() {
            let expected = (zeta[i], rep.dims()[i]);
            if f.shape() != expected {
                return Err(FramedError::FramingShape { vertex: i + 1, expected, found: f.shape() });
            }
        }
        Ok(FramedRep { rep, zeta, framing })
    }

    pub fn zero_framing(rep: Representation, zeta: FramingVector) -> Result<Self, FramedError> {
        let framing = zeta.iter().zip(rep.dims()).map(|(&z, &d)| Matrix::zeros(z, d)).collect();
        FramedRep::new(rep, zeta, framing)
    }

    /// A framing with independent random entries.
    pub fn random(rep: Representation, zeta: FramingVector, rng: &mut impl Rng) -> Result<Self, FramedError> {
        let framing = zeta.iter().zip(rep.dims()).map(|(&z, &d)| random_matrix(rng, z, d)).collect();
        FramedRep::new(rep, zeta, framing)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn zeta(&self) -> &FramingVector {
        &self.zeta
    }

    pub fn dims(&self) -> &DimensionVector {
        self.rep.dims()
    }

    pub fn framing(&self) -> &[Matrix] {
        &self.framing
    }

    pub fn framing_at(&self, v: VertexId) -> &Matrix {
        &self.framing[v - 1]
    }

    pub fn framing_kernel(&self) -> GradedSubspace {
        GradedSubspace::kernel_of(&self.framing)
    }

    /// g·(M, f) = (g·M, f g⁻¹).
    pub fn change_basis(&self, g: &[Matrix]) -> Option<FramedRep> {
        let rep = self.rep.change_basis(g)?;
        let framing = self
            .framing
            .iter()
            .zip(g)
            .map(|(f, gi)| gi.inverse().map(|inv| f * &inv))
            .collect::<Option<Vec<_>>>()?;
        Some(FramedRep { rep, zeta: self.zeta.clone(), framing })
    }
}

/// Stable iff no nonzero submodule of M lies in ker f.
pub fn is_stable(fr: &FramedRep) -> bool {
    maximal_submodule_in(&fr.rep, &fr.framing_kernel()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::catalog;

    /// The nilpotent block with X e₁ = e₂, so e₂ spans the kernel.
    fn jordan2() -> Representation {
        Representation::new(catalog::jordan_quiver(), vec![2], vec![Matrix::from_ints(2, 2, &[0, 0, 1, 0])]).unwrap()
    }

    #[test]
    fn jordan_block_framings() {
        let good = FramedRep::new(jordan2(), vec![1], vec![Matrix::from_ints(1, 2, &[0, 1])]).unwrap();
        let bad = FramedRep::new(jordan2(), vec![1], vec![Matrix::from_ints(1, 2, &[1, 0])]).unwrap();
        assert!(is_stable(&good));
        assert!(!is_stable(&bad));
    }

    #[test]
    fn injective_and_zero_framings() {
        let injective = FramedRep::new(jordan2(), vec![2], vec![Matrix::identity(2)]).unwrap();
        assert!(is_stable(&injective));
        assert!(!is_stable(&FramedRep::zero_framing(jordan2(), vec![3]).unwrap()));
    }

    #[test]
    fn rejects_bad_shapes() {
        let err = FramedRep::new(jordan2(), vec![1], vec![Matrix::zeros(2, 2)]).unwrap_err();
        assert!(matches!(err, FramedError::FramingShape { vertex: 1, .. }));
    }
}
