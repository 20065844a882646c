//! Plücker coordinates of graded subspaces and exact evaluation of equation sets.

use std::collections::BTreeMap;

use algebra_core::{Matrix, Scalar, VertexId};
use itertools::Itertools;
use num_traits::{One, Zero};
use rep_core::GradedSubspace;

use crate::equations::{EquationSet, EquationTag};
use crate::error::FiberError;

/// Maximal minors p_I of a basis, indexed by increasing 1-based tuples, scaled so the first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    pub dim: usize,
    pub degree: usize,
    pub coords: BTreeMap<Vec<usize>, Scalar>,
}

impl PlueckerVector {
    pub fn of_basis(basis: &Matrix) -> Self {
        let (dim, degree) = basis.shape();
        let coords = (1..=dim)
            .combinations(degree)
            .map(|tuple| {
                let rows: Vec<usize> = tuple.iter().map(|k| k - 1).collect();
                let minor = basis.select_rows(&rows).determinant();
                (tuple, minor)
            })
            .collect();
        PlueckerVector { dim, degree, coords }.normalized()
    }

    /// Rescales so the first nonzero coordinate is 1; the zero vector is returned unchanged.
    pub fn normalized(mut self) -> Self {
        if let Some(lead) = self.coords.values().find(|c| !c.is_zero()).cloned() {
            for c in self.coords.values_mut() {
                *c = &*c / &lead;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coords.values().all(Zero::is_zero)
    }

    pub fn get(&self, tuple: &[usize]) -> Scalar {
        self.coords.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// Coordinates of U_v for every vertex.
pub fn pluecker_coordinates(u: &GradedSubspace) -> Vec<PlueckerVector> {
    u.bases().iter().map(PlueckerVector::of_basis).collect()
}

/// A member of the set that does not vanish at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub equation: usize,
    pub tag: EquationTag,
    pub value: Scalar,
}

/// Nonzero residuals of every equation at the given per-vertex coordinates.
pub fn evaluate_equations(eqs: &EquationSet, coords: &[PlueckerVector]) -> Result<Vec<Residual>, FiberError> {
    if coords.len() != eqs.ambient.len() {
        return Err(FiberError::CoordinateCount { expected: eqs.ambient.len(), found: coords.len() });
    }
    for (a, p) in eqs.ambient.iter().zip(coords) {
        if p.dim != a.dim || p.degree != a.degree {
            return Err(FiberError::DegreeMismatch { vertex: a.vertex, expected: a.degree, found: p.degree });
        }
        if p.is_zero() {
            return Err(FiberError::ZeroVector(a.vertex));
        }
    }
    let at = |v: VertexId| eqs.ambient.iter().position(|a| a.vertex == v).map(|k| &coords[k]);
    let mut residuals = Vec::new();
    for (n, e) in eqs.equations.iter().enumerate() {
        let mut value = Scalar::zero();
        for (coef, monomial) in &e.terms {
            let mut term = coef.clone();
            for c in monomial {
                term *= at(c.vertex).map_or_else(Scalar::zero, |p| p.get(&c.indices));
            }
            value += term;
        }
        if !value.is_zero() {
            residuals.push(Residual { equation: n, tag: e.tag, value });
        }
    }
    Ok(residuals)
}

/// Coordinates from a graded subspace, checked against the degrees of the equation set.
pub fn coordinates_for(eqs: &EquationSet, u: &GradedSubspace) -> Result<Vec<PlueckerVector>, FiberError> {
    let coords = pluecker_coordinates(u);
    for (a, p) in eqs.ambient.iter().zip(&coords) {
        if p.degree != a.degree {
            return Err(FiberError::DegreeMismatch { vertex: a.vertex, expected: a.degree, found: p.degree });
        }
    }
    Ok(coords)
}

/// Unit vector on the leading tuple, the coordinates of the span of the first m basis vectors.
pub fn leading_unit(dim: usize, degree: usize) -> PlueckerVector {
    let coords = (1..=dim)
        .combinations(degree)
        .enumerate()
        .map(|(n, t)| (t, if n == 0 { Scalar::one() } else { Scalar::zero() }))
        .collect();
    PlueckerVector { dim, degree, coords }
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::int;

    #[test]
    fn coordinate_span_is_a_unit_vector() {
        let basis = Matrix::from_ints(4, 2, &[1, 0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(PlueckerVector::of_basis(&basis), leading_unit(4, 2));
    }

    #[test]
    fn two_plane_matches_cofactors() {
        let basis = Matrix::from_ints(4, 2, &[1, 2, 3, 4, 5, 6, 7, 8]);
        let p = PlueckerVector::of_basis(&basis);
        let raw = |a: usize, b: usize| basis.get(a, 0) * basis.get(b, 1) - basis.get(b, 0) * basis.get(a, 1);
        let lead = raw(0, 1);
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            assert_eq!(p.get(&[a + 1, b + 1]), raw(a, b) / &lead);
        }
    }

    #[test]
    fn scaling_a_column_is_projectively_invisible() {
        let basis = Matrix::from_ints(3, 2, &[1, 2, 0, 1, 4, 4]);
        let scaled = &basis * &Matrix::diagonal(&[int(3), int(-2)]);
        assert_eq!(PlueckerVector::of_basis(&basis), PlueckerVector::of_basis(&scaled));
    }
}
