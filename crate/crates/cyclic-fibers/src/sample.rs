//! Seeded cyclic representations with prescribed characteristic polynomials.

use algebra_core::{int, Matrix, Scalar};
use framed::{is_stable, FramedRep};
use num_traits::Zero;
use rand::Rng;
use rep_core::{random_invertible, Representation};

use crate::error::FiberError;
use crate::spec::{validate_root_data, CyclicQuiverSpec, RootData};

const ENTRY_RANGE: std::ops::RangeInclusive<i64> = -4..=4;

fn strictly_upper(rng: &mut impl Rng, d: usize) -> Matrix {
    Matrix::from_fn(d, d, |i, j| if j > i { int(rng.gen_range(ENTRY_RANGE)) } else { int(0) })
}

/// Block with a single nonzero root λ ≠ 0: τ_1 = λ + N, and τ_i its conjugate along the cycle.
fn invertible_block(rng: &mut impl Rng, n: usize, d: usize, lambda: &Scalar) -> Vec<Matrix> {
    let g = random_invertible(rng, d);
    let core = &Matrix::identity(d).scale(lambda) + &strictly_upper(rng, d);
    let tau = &(&g * &core) * &g.inverse().expect("invertible");
    let mut arrows: Vec<Matrix> = (1..n).map(|_| random_invertible(rng, d)).collect();
    let around = arrows.iter().fold(Matrix::identity(d), |acc, a| a * &acc);
    arrows.push(&tau * &around.inverse().expect("invertible"));
    arrows
}

/// Nilpotent block with dimensions r: a_i is weakly upper triangular for i < n and a_n strictly,
/// so every cycle lowers the index of a basis vector.
fn nilpotent_block(rng: &mut impl Rng, r: &[usize]) -> Vec<Matrix> {
    let n = r.len();
    (1..=n)
        .map(|i| {
            let (rows, cols) = (r[i % n], r[i - 1]);
            Matrix::from_fn(rows, cols, |l, k| {
                let allowed = if i < n { l <= k } else { l < k };
                if allowed && rng.gen_bool(0.8) {
                    int(rng.gen_range(ENTRY_RANGE))
                } else {
                    int(0)
                }
            })
        })
        .collect()
}

/// A representation of dimension α whose cycle operators have χ_i = ∏_j (x − λ_j)^{(r_j)_i}.
pub fn sample_cyclic_representation(
    spec: &CyclicQuiverSpec,
    rd: &RootData,
    rng: &mut impl Rng,
) -> Result<Representation, FiberError> {
    validate_root_data(rd, &spec.alpha)?;
    let n = spec.n;
    let mut x = Representation::zero(spec.quiver(), vec![0; n])?;
    for (lambda, r) in &rd.roots {
        let arrows = if lambda.is_zero() { nilpotent_block(rng, r) } else { invertible_block(rng, n, r[0], lambda) };
        x = x.direct_sum(&Representation::new(spec.quiver(), r.clone(), arrows)?);
    }
    let g: Vec<Matrix> = spec.alpha.iter().map(|&d| random_invertible(rng, d)).collect();
    Ok(x.change_basis(&g).expect("invertible base change"))
}

/// Samples representations and framings until the pair is stable.
pub fn sample_stable_pair(
    spec: &CyclicQuiverSpec,
    rd: &RootData,
    rng: &mut impl Rng,
    attempts: usize,
) -> Result<FramedRep, FiberError> {
    for _ in 0..attempts {
        let x = sample_cyclic_representation(spec, rd, rng)?;
        let fr = FramedRep::random(x, spec.zeta.clone(), rng)?;
        if is_stable(&fr) {
            return Ok(fr);
        }
    }
    Err(FiberError::NoStableSample(attempts))
}
