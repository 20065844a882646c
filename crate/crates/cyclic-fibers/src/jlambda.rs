//! The modules J(λ, r) of Jordan strings and the fiber ambient ⊕_j J(λ_j, r_j).

use algebra_core::{format_scalar, int, Matrix, Scalar, VertexId};
use rep_core::{DimensionVector, Representation};

use crate::error::FiberError;
use crate::spec::{validate_root_data, CyclicQuiverSpec, RootData};

/// Basis vector e_{q,copy,s}: framing component q, coordinate copy ∈ 1..ζ_q, derivative order s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringLabel {
    pub q: VertexId,
    pub copy: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JLambdaModule {
    pub spec: CyclicQuiverSpec,
    pub lambda: Scalar,
    pub r: DimensionVector,
    /// R = max_i r_i, the length of every string.
    pub order: usize,
    pub rep: Representation,
    /// Labels in flat order k = s·Q + ν, shared by all vertices.
    pub labels: Vec<StringLabel>,
}

impl JLambdaModule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// 0-based flat position of a label.
    pub fn position(&self, label: &StringLabel) -> usize {
        flat_position(&self.spec, label)
    }

    /// Position of the label whose image under a_i is `label` plus lower terms, if any.
    pub fn primed(&self, i: VertexId, position: usize) -> Option<usize> {
        let label = self.labels[position];
        if label.q != i {
            return Some(position);
        }
        (label.s + 1 < self.order).then(|| self.position(&StringLabel { s: label.s + 1, ..label }))
    }
}

pub fn flat_position(spec: &CyclicQuiverSpec, label: &StringLabel) -> usize {
    label.s * spec.string_count() + spec.string_offset(label.q) + label.copy - 1
}

fn string_labels(spec: &CyclicQuiverSpec, order: usize) -> Vec<StringLabel> {
    let mut labels = Vec::with_capacity(order * spec.string_count());
    for s in 0..order {
        for q in 1..=spec.n {
            for copy in 1..=spec.zeta[q - 1] {
                labels.push(StringLabel { q, copy, s });
            }
        }
    }
    labels
}

/// a_i acts as λ + shift (e_s ↦ λe_s + e_{s−1}) on the strings of component i and fixes the others.
pub fn build_j_lambda(spec: &CyclicQuiverSpec, lambda: &Scalar, r: &[usize]) -> Result<JLambdaModule, FiberError> {
    if r.len() != spec.n {
        return Err(FiberError::VertexCount { expected: spec.n, found: r.len() });
    }
    let order = r.iter().copied().max().unwrap_or(0);
    if order == 0 {
        return Err(FiberError::ZeroMultiplicity(format_scalar(lambda)));
    }
    let labels = string_labels(spec, order);
    let d = labels.len();
    let matrices = (1..=spec.n)
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            for (k, label) in labels.iter().enumerate() {
                if label.q == i {
                    m.set(k, k, lambda.clone());
                    if label.s > 0 {
                        m.set(flat_position(spec, &StringLabel { s: label.s - 1, ..*label }), k, int(1));
                    }
                } else {
                    m.set(k, k, int(1));
                }
            }
            m
        })
        .collect();
    let rep = Representation::new(spec.quiver(), vec![d; spec.n], matrices)?;
    Ok(JLambdaModule { spec: spec.clone(), lambda: lambda.clone(), r: r.to_vec(), order, rep, labels })
}

/// One factor (J(λ_j, r_j), r_j) per root; the fiber is the product of their submodule Grassmannians.
pub fn fiber_components(spec: &CyclicQuiverSpec, rd: &RootData) -> Result<Vec<(JLambdaModule, DimensionVector)>, FiberError> {
    validate_root_data(rd, &spec.alpha)?;
    rd.roots
        .iter()
        .map(|(lambda, r)| Ok((build_j_lambda(spec, lambda, r)?, r.clone())))
        .collect()
}

/// ⊕_j J(λ_j, r_j) with component offsets; every vertex has the same dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberAmbient {
    pub spec: CyclicQuiverSpec,
    pub components: Vec<JLambdaModule>,
    pub rep: Representation,
}

impl FiberAmbient {
    pub fn new(spec: &CyclicQuiverSpec, rd: &RootData) -> Result<Self, FiberError> {
        let components: Vec<JLambdaModule> = fiber_components(spec, rd)?.into_iter().map(|(j, _)| j).collect();
        let mut rep = Representation::zero(spec.quiver(), vec![0; spec.n])?;
        for c in &components {
            rep = rep.direct_sum(&c.rep);
        }
        Ok(FiberAmbient { spec: spec.clone(), components, rep })
    }

    pub fn offset(&self, component: usize) -> usize {
        self.components[..component].iter().map(JLambdaModule::dim).sum()
    }

    pub fn dim(&self) -> usize {
        self.rep.dims().first().copied().unwrap_or(0)
    }

    /// Positions of the labels (j, q = i, copy, s = 0) for every component j, copy-major per j.
    pub fn framing_positions(&self, i: VertexId) -> Vec<Vec<usize>> {
        self.components
            .iter()
            .enumerate()
            .map(|(j, c)| {
                (1..=self.spec.zeta[i - 1])
                    .map(|copy| self.offset(j) + c.position(&StringLabel { q: i, copy, s: 0 }))
                    .collect()
            })
            .collect()
    }
}

/// True when (τ_i − λ)^R vanishes at every vertex.
pub fn is_annihilated(j: &JLambdaModule) -> bool {
    (1..=j.spec.n).all(|i| {
        let tau = crate::spec::tau_matrix(&j.rep, i);
        let shifted = &tau - &Matrix::identity(j.dim()).scale(&j.lambda);
        shifted.pow(j.order).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::tau_matrix;

    #[test]
    fn eigenfunctions_only_when_r_is_one() {
        let spec = CyclicQuiverSpec::new(1, vec![1], vec![3]).unwrap();
        let j = build_j_lambda(&spec, &int(5), &[1]).unwrap();
        assert_eq!(j.rep.matrix(0), &Matrix::identity(3).scale(&int(5)));
    }

    #[test]
    fn nilpotent_strings_of_length_two() {
        let spec = CyclicQuiverSpec::new(1, vec![2], vec![2]).unwrap();
        let j = build_j_lambda(&spec, &int(0), &[2]).unwrap();
        // Flat order (ν, s): 1=(1,0), 2=(2,0), 3=(1,1), 4=(2,1); shift sends e3 ↦ e1, e4 ↦ e2.
        let expected = Matrix::from_ints(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(j.rep.matrix(0), &expected);
        assert!(is_annihilated(&j));
    }

    #[test]
    fn two_cycle_with_unit_root() {
        let spec = CyclicQuiverSpec::new(2, vec![1, 1], vec![1, 1]).unwrap();
        let j = build_j_lambda(&spec, &int(1), &[1, 1]).unwrap();
        assert_eq!(j.rep.dims(), &vec![2, 2]);
        for i in 1..=2 {
            assert_eq!(tau_matrix(&j.rep, i), Matrix::identity(2));
        }
        assert!(is_annihilated(&j));
    }

    #[test]
    fn mixed_roots_give_one_factor_each() {
        let spec = CyclicQuiverSpec::new(2, vec![3, 2], vec![1, 2]).unwrap();
        let rd = RootData::new(vec![(int(0), vec![2, 1]), (int(-2), vec![1, 1])]);
        let factors = fiber_components(&spec, &rd).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0.dim(), 2 * 3);
        assert_eq!(factors[1].0.dim(), 3);
        assert_eq!(factors[1].1, vec![1, 1]);
        let ambient = FiberAmbient::new(&spec, &rd).unwrap();
        assert_eq!(ambient.rep.dims(), &vec![9, 9]);
        assert_eq!(ambient.framing_positions(2), vec![vec![1, 2], vec![7, 8]]);
    }
}
