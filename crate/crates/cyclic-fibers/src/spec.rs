//! The cyclic quiver with n vertices, its cycle operators τ_i, and root data for their spectra.

use algebra_core::{catalog, char_poly, format_scalar, Matrix, Poly, Quiver, Scalar, VertexId};
use num_traits::Zero;
use rep_core::{DimensionVector, Representation};

use crate::error::FiberError;

/// Arrows a_i: i → i+1 (mod n); for n = 1 the single loop of the Jordan quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuiverSpec {
    pub n: usize,
    pub alpha: DimensionVector,
    pub zeta: DimensionVector,
}

impl CyclicQuiverSpec {
    pub fn new(n: usize, alpha: DimensionVector, zeta: DimensionVector) -> Result<Self, FiberError> {
        if n == 0 {
            return Err(FiberError::EmptyCycle);
        }
        for v in [&alpha, &zeta] {
            if v.len() != n {
                return Err(FiberError::VertexCount { expected: n, found: v.len() });
            }
        }
        Ok(CyclicQuiverSpec { n, alpha, zeta })
    }

    pub fn quiver(&self) -> Quiver {
        cycle_quiver(self.n)
    }

    /// Q = Σ ζ_q, the number of Jordan strings per derivative order.
    pub fn string_count(&self) -> usize {
        self.zeta.iter().sum()
    }

    /// Offset of the first string of component q among the Q strings.
    pub fn string_offset(&self, q: VertexId) -> usize {
        self.zeta[..q - 1].iter().sum()
    }

    /// The vertex after i along the cycle.
    pub fn next(&self, i: VertexId) -> VertexId {
        i % self.n + 1
    }
}

pub fn cycle_quiver(n: usize) -> Quiver {
    if n == 1 {
        catalog::jordan_quiver()
    } else {
        catalog::cyclic_quiver(n)
    }
}

/// Matrix of the shortest path a_{to−1}…a_from, the identity when from = to.
pub fn segment_matrix(x: &Representation, from: VertexId, to: VertexId) -> Matrix {
    let n = x.quiver().vertex_count();
    let mut acc = Matrix::identity(x.dim(from));
    let mut v = from;
    while v != to {
        acc = x.matrix(v - 1) * &acc;
        v = v % n + 1;
    }
    acc
}

/// τ_i = a_{i−1}…a_{i+1}a_i acting on M_i.
pub fn tau_matrix(x: &Representation, i: VertexId) -> Matrix {
    let n = x.quiver().vertex_count();
    let prev = (i + n - 2) % n + 1;
    x.matrix(prev - 1) * &segment_matrix(x, i, prev)
}

/// χ_i = det(x − τ_i) for every vertex.
pub fn char_polys(x: &Representation) -> Vec<Poly> {
    x.quiver().vertices().map(|i| char_poly(&tau_matrix(x, i))).collect()
}

/// Roots λ_j with multiplicity vectors r_j, so that χ_i = ∏_j (x − λ_j)^{(r_j)_i}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    pub roots: Vec<(Scalar, DimensionVector)>,
}

impl RootData {
    pub fn new(roots: Vec<(Scalar, DimensionVector)>) -> Self {
        RootData { roots }
    }

    pub fn char_polys(&self, n: usize) -> Vec<Poly> {
        (0..n)
            .map(|i| {
                let factors: Vec<(Scalar, usize)> = self.roots.iter().map(|(l, r)| (l.clone(), r[i])).collect();
                Poly::from_roots(&factors)
            })
            .collect()
    }
}

/// Checks Σ_j r_j = α, distinct roots, nonzero multiplicity vectors, and constant r_j for λ_j ≠ 0.
pub fn validate_root_data(rd: &RootData, alpha: &[usize]) -> Result<(), FiberError> {
    let n = alpha.len();
    let mut total = vec![0usize; n];
    for (j, (lambda, r)) in rd.roots.iter().enumerate() {
        let name = format_scalar(lambda);
        if r.len() != n {
            return Err(FiberError::InvalidRoots(format!("root {name} has {} multiplicities, expected {n}", r.len())));
        }
        if r.iter().all(|&m| m == 0) {
            return Err(FiberError::InvalidRoots(format!("root {name} has zero multiplicity vector")));
        }
        if rd.roots[..j].iter().any(|(other, _)| other == lambda) {
            return Err(FiberError::InvalidRoots(format!("root {name} is listed twice")));
        }
        if !lambda.is_zero() && r.iter().any(|&m| m != r[0]) {
            return Err(FiberError::InvalidRoots(format!(
                "nonzero root {name} has unequal multiplicities {r:?} along the cycle"
            )));
        }
        for (t, m) in total.iter_mut().zip(r) {
            *t += m;
        }
    }
    if total != alpha {
        return Err(FiberError::InvalidRoots(format!("multiplicities sum to {total:?}, expected α = {alpha:?}")));
    }
    Ok(())
}

/// Root data read off the characteristic polynomials of a representation.
pub fn root_data_of(x: &Representation) -> Result<RootData, FiberError> {
    let n = x.quiver().vertex_count();
    let mut roots: Vec<(Scalar, DimensionVector)> = Vec::new();
    for (i, chi) in char_polys(x).iter().enumerate() {
        let (found, rest) = chi.rational_roots();
        if rest.degree() != Some(0) {
            return Err(FiberError::IrrationalSpectrum(i + 1));
        }
        for (lambda, m) in found {
            match roots.iter_mut().find(|(l, _)| *l == lambda) {
                Some((_, r)) => r[i] = m,
                None => {
                    let mut r = vec![0; n];
                    r[i] = m;
                    roots.push((lambda, r));
                }
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootData { roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::int;

    #[test]
    fn char_polys_of_small_cases() {
        let zero = Representation::zero(cycle_quiver(1), vec![2]).unwrap();
        assert_eq!(char_polys(&zero), vec![Poly::new(vec![int(0), int(0), int(1)])]);
        let diag = Representation::new(cycle_quiver(1), vec![2], vec![Matrix::diagonal(&[int(1), int(2)])]).unwrap();
        assert_eq!(char_polys(&diag), vec![Poly::from_roots(&[(int(1), 1), (int(2), 1)])]);
        let ones = Matrix::identity(1);
        let two = Representation::new(cycle_quiver(2), vec![1, 1], vec![ones.clone(), ones]).unwrap();
        assert_eq!(char_polys(&two), vec![Poly::linear(&int(1)); 2]);
    }

    #[test]
    fn root_data_validation() {
        assert!(validate_root_data(&RootData::new(vec![(int(1), vec![2, 2])]), &[2, 2]).is_ok());
        let unequal = RootData::new(vec![(int(1), vec![2, 1]), (int(0), vec![0, 1])]);
        assert!(matches!(validate_root_data(&unequal, &[2, 2]), Err(FiberError::InvalidRoots(_))));
        assert!(validate_root_data(&RootData::new(vec![(int(0), vec![2, 1])]), &[2, 1]).is_ok());
        let repeated = RootData::new(vec![(int(0), vec![1, 0]), (int(0), vec![0, 1])]);
        assert!(validate_root_data(&repeated, &[1, 1]).is_err());
    }

    #[test]
    fn root_data_from_a_representation() {
        let x = Representation::new(
            cycle_quiver(2),
            vec![2, 1],
            vec![Matrix::from_ints(1, 2, &[1, 0]), Matrix::from_ints(2, 1, &[3, 0])],
        )
        .unwrap();
        let rd = root_data_of(&x).unwrap();
        assert_eq!(rd.roots, vec![(int(0), vec![1, 0]), (int(3), vec![1, 1])]);
        assert!(validate_root_data(&rd, &[2, 1]).is_ok());
    }
}
