//! Socle multiplicities for vertex simples S(i) and cycle simples S(τ, λ), and the framing criterion
//! built from them.

use algebra_core::{char_poly, int, Matrix, Quiver, Scalar};
use framed::{is_stable, FramedRep};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rep_core::{hom_space, maximal_submodule_in, socle, GradedSubspace, Representation};

use crate::decomposition::SuccessiveDecomposition;
use crate::error::SuccessiveError;
use crate::roots::cycle_operator;

const WITNESS_ATTEMPTS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    /// Multiplicity of S(i), indexed by `i − 1`.
    pub vertex_simples: Vec<usize>,
    /// (component, λ, multiplicity of S(τ, λ)) for the nonzero λ that occur.
    pub cycle_simples: Vec<(usize, Scalar, usize)>,
}

/// S(τ, λ): one dimension on every vertex of the cycle, arrows 1 except λ on the arrow closing it.
pub fn cycle_simple(decomp: &SuccessiveDecomposition, component: usize, lambda: &Scalar) -> Representation {
    let q: &Quiver = &decomp.quiver;
    let comp = &decomp.components[component];
    let dims: Vec<usize> = q.vertices().map(|v| usize::from(decomp.component_of[v - 1] == component && comp.is_cycle())).collect();
    let closing = comp.cycle_arrows.last().copied();
    let matrices = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let mut m = Matrix::zeros(dims[a.head - 1], dims[a.tail - 1]);
            if comp.cycle_arrows.contains(&k) {
                m.set(0, 0, if Some(k) == closing { lambda.clone() } else { int(1) });
            }
            m
        })
        .collect();
    Representation::new(q.clone(), dims, matrices).expect("cycle simple shapes")
}

/// Multiplicities of S(i) and of S(τ, λ), λ ≠ 0, in soc M.
pub fn cyclic_socle_multiplicities(
    m: &Representation,
    decomp: &SuccessiveDecomposition,
) -> Result<SocleReport, SuccessiveError> {
    let q = &decomp.quiver;
    let vertex_simples = socle(m).dims();
    let mut cycle_simples = Vec::new();
    for (c, comp) in decomp.components.iter().enumerate() {
        if !comp.is_cycle() {
            continue;
        }
        // Vectors on the cycle killed by every arrow leaving it, then the largest submodule inside.
        let spanning = q
            .vertices()
            .map(|v| {
                if decomp.component_of[v - 1] != c {
                    return Matrix::zeros(m.dim(v), 0);
                }
                let leaving: Vec<&Matrix> =
                    q.outgoing(v).into_iter().filter(|&k| !decomp.is_cycle_arrow(k)).map(|k| m.matrix(k)).collect();
                Matrix::vstack(&leaving, m.dim(v)).kernel()
            })
            .collect();
        let killed = GradedSubspace::new(m.dims().clone(), spanning)?;
        let inside = maximal_submodule_in(m, &killed);
        let v0 = comp.vertices[0];
        let basis = inside.at(v0);
        let restricted = basis
            .solve(&(&cycle_operator(m, decomp, v0) * basis))
            .expect("the largest submodule is τ-invariant");
        let (roots, rest) = char_poly(&restricted).rational_roots();
        if rest.degree() != Some(0) {
            return Err(SuccessiveError::IrrationalSpectrum(v0));
        }
        for (lambda, _) in roots.into_iter().filter(|(l, _)| !l.is_zero()) {
            let multiplicity = hom_space(&cycle_simple(decomp, c, &lambda), m).len();
            if multiplicity > 0 {
                cycle_simples.push((c, lambda, multiplicity));
            }
        }
    }
    Ok(SocleReport { vertex_simples, cycle_simples })
}

/// Socle multiplicities of the ambient module: ζ_i for S(i) and Σ_{i∈τ} ζ_i for each S(τ, λ) in `report`.
pub fn ambient_socle_multiplicities(decomp: &SuccessiveDecomposition, zeta: &[usize], report: &SocleReport) -> SocleReport {
    let cycle_simples = report
        .cycle_simples
        .iter()
        .map(|(c, lambda, _)| {
            let total = decomp.components[*c].vertices.iter().map(|&v| zeta[v - 1]).sum();
            (*c, lambda.clone(), total)
        })
        .collect();
    SocleReport { vertex_simples: zeta.to_vec(), cycle_simples }
}

/// Whether M admits a stable framing of dimension ζ, with a witness when it does.
pub fn framing_existence_cyclic(
    m: &Representation,
    decomp: &SuccessiveDecomposition,
    zeta: &[usize],
) -> Result<(bool, Option<FramedRep>), SuccessiveError> {
    let n = decomp.quiver.vertex_count();
    if zeta.len() != n {
        return Err(SuccessiveError::VertexCount { expected: n, found: zeta.len() });
    }
    let report = cyclic_socle_multiplicities(m, decomp)?;
    let ambient = ambient_socle_multiplicities(decomp, zeta, &report);
    let fits = report.vertex_simples.iter().zip(&ambient.vertex_simples).all(|(a, b)| a <= b)
        && report.cycle_simples.iter().zip(&ambient.cycle_simples).all(|(a, b)| a.2 <= b.2);
    if !fits {
        return Ok((false, None));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..WITNESS_ATTEMPTS {
        let fr = FramedRep::random(m.clone(), zeta.to_vec(), &mut rng)?;
        if is_stable(&fr) {
            return Ok((true, Some(fr)));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::detect_successive;
    use algebra_core::catalog;

    fn jordan(m: Matrix) -> (Representation, SuccessiveDecomposition) {
        let q = catalog::jordan_quiver();
        let d = detect_successive(&q).unwrap();
        (Representation::new(q, vec![m.rows()], vec![m]).unwrap(), d)
    }

    #[test]
    fn distinct_eigenvalues_admit_a_line_framing() {
        let (m, d) = jordan(Matrix::diagonal(&[int(1), int(2)]));
        let report = cyclic_socle_multiplicities(&m, &d).unwrap();
        assert_eq!(report.vertex_simples, vec![0]);
        assert_eq!(report.cycle_simples, vec![(0, int(1), 1), (0, int(2), 1)]);
        let (ok, witness) = framing_existence_cyclic(&m, &d, &[1]).unwrap();
        assert!(ok && is_stable(&witness.unwrap()));
    }

    #[test]
    fn repeated_eigenvalue_needs_two_framing_coordinates() {
        let (m, d) = jordan(Matrix::identity(2));
        assert_eq!(cyclic_socle_multiplicities(&m, &d).unwrap().cycle_simples, vec![(0, int(1), 2)]);
        assert_eq!(framing_existence_cyclic(&m, &d, &[1]).unwrap(), (false, None));
        assert!(framing_existence_cyclic(&m, &d, &[2]).unwrap().0);
    }

    #[test]
    fn a_cycle_simple_is_its_own_socle() {
        let d = detect_successive(&catalog::cyclic_quiver(3)).unwrap();
        let s = cycle_simple(&d, 0, &int(2));
        let report = cyclic_socle_multiplicities(&s, &d).unwrap();
        assert_eq!(report, SocleReport { vertex_simples: vec![0, 0, 0], cycle_simples: vec![(0, int(2), 1)] });
    }
}
