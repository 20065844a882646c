//! Seeded sampling of representations that satisfy a relation set exactly.

use algebra_core::{int, LinComb, Matrix, Quiver, RelationSet, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::RepError;
use crate::representation::{DimensionVector, Representation};

const ENTRY_RANGE: std::ops::RangeInclusive<i64> = -5..=5;
const ATTEMPTS: usize = 50;

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(ENTRY_RANGE)))
}

/// A random invertible matrix, built as a product of unit lower and upper triangular factors.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => int(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Less => int(0),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Less => int(rng.gen_range(-2..=2)),
        std::cmp::Ordering::Greater => int(0),
    });
    &lower * &upper
}

/// A relation-free representation with independent random entries.
pub fn sample_free(q: &Quiver, alpha: &DimensionVector, rng: &mut impl Rng) -> Result<Representation, RepError> {
    let matrices = q
        .arrows()
        .iter()
        .map(|a| random_matrix(rng, alpha[a.head - 1], alpha[a.tail - 1]))
        .collect();
    Representation::new(q.clone(), alpha.clone(), matrices)
}

/// The loop arrow and exponent when the relation is a single power aⁿ of a loop.
fn loop_power(q: &Quiver, r: &LinComb) -> Option<(usize, usize)> {
    if r.len() != 1 {
        return None;
    }
    let (p, _) = r.terms().next()?;
    let first = *p.arrows.first()?;
    let a = q.arrow(first);
    (a.tail == a.head && p.arrows.iter().all(|&k| k == first)).then_some((first, p.len()))
}

/// A d×d matrix with Xⁿ = 0: random strictly upper triangular blocks of size ≤ n, then conjugated.
fn nilpotent_of_order(rng: &mut impl Rng, d: usize, n: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    let mut start = 0;
    while start < d {
        let size = rng.gen_range(1..=n.min(d - start));
        for i in 0..size {
            for j in i + 1..size {
                m.set(start + i, start + j, int(rng.gen_range(ENTRY_RANGE)));
            }
        }
        start += size;
    }
    if d > n {
        let g = random_invertible(rng, d);
        let inv = g.inverse().expect("unit triangular factors are invertible");
        m = &(&g * &m) * &inv;
    }
    m
}

/// Samples a representation satisfying ρ, deterministic in the seed.
///
/// Supported: relation-free quivers, loop powers aⁿ, and relations in which each arrow
/// occurs at most once per term (chains composing to zero, commutativity squares).
pub fn sample_representation(
    q: &Quiver,
    rho: &RelationSet,
    alpha: &DimensionVector,
    seed: u64,
) -> Result<Representation, RepError> {
    if alpha.len() != q.vertex_count() {
        return Err(RepError::DimensionCount { expected: q.vertex_count(), found: alpha.len() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        if let Some(x) = attempt(q, rho, alpha, &mut rng)? {
            return Ok(x);
        }
    }
    Err(RepError::Infeasible(format!("no sample satisfying the relations after {ATTEMPTS} attempts")))
}

/// `c · L X R` for the unknown matrix X.
type LinearTerm = (Scalar, Matrix, Matrix);

fn attempt(q: &Quiver, rho: &RelationSet, alpha: &DimensionVector, rng: &mut ChaCha8Rng) -> Result<Option<Representation>, RepError> {
    let arrow_count = q.arrows().len();
    let mut sampled: Vec<Option<Matrix>> = vec![None; arrow_count];
    let mut handled = vec![false; rho.relations().len()];
    for (idx, r) in rho.relations().iter().enumerate() {
        if let Some((k, n)) = loop_power(q, r) {
            let d = alpha[q.arrow(k).tail - 1];
            let m = match &sampled[k] {
                // A second power relation on the same loop: keep the stricter one.
                Some(_) => nilpotent_of_order(rng, d, n.min(d.max(1))),
                None => nilpotent_of_order(rng, d, n),
            };
            sampled[k] = Some(m);
            handled[idx] = true;
        }
    }
    for k in 0..arrow_count {
        if sampled[k].is_some() {
            continue;
        }
        let a = q.arrow(k);
        let shape = (alpha[a.head - 1], alpha[a.tail - 1]);
        let mut blocks: Vec<(Vec<LinearTerm>, Matrix)> = Vec::new();
        for (idx, r) in rho.relations().iter().enumerate() {
            if handled[idx] {
                continue;
            }
            let pending: Vec<usize> = r
                .terms()
                .flat_map(|(p, _)| p.arrows.iter().copied())
                .filter(|&j| sampled[j].is_none() && j != k)
                .collect();
            let mentions = r.terms().any(|(p, _)| p.arrows.contains(&k));
            if !pending.is_empty() || !mentions {
                continue;
            }
            handled[idx] = true;
            for (_, piece) in r.components() {
                let (s, t) = piece.terms().next().map(|(p, _)| (p.source, p.target)).expect("nonempty component");
                let mut linear = Vec::new();
                let mut constant = Matrix::zeros(alpha[t - 1], alpha[s - 1]);
                for (p, c) in piece.terms() {
                    let hits = p.arrows.iter().filter(|&&j| j == k).count();
                    if hits > 1 {
                        return Err(RepError::UnsupportedFamily(format!(
                            "arrow {} occurs {hits} times in a relation term",
                            a.id
                        )));
                    }
                    let product = |ids: &[usize], dim: usize| {
                        ids.iter().rev().fold(Matrix::identity(dim), |acc, &j| sampled[j].as_ref().expect("sampled") * &acc)
                    };
                    match p.arrows.iter().position(|&j| j == k) {
                        None => {
                            let m = product(&p.arrows, alpha[s - 1]).scale(c);
                            constant = &constant + &m;
                        }
                        Some(pos) => {
                            let outer = product(&p.arrows[..pos], alpha[a.head - 1]);
                            let inner = product(&p.arrows[pos + 1..], alpha[s - 1]);
                            linear.push((c.clone(), outer, inner));
                        }
                    }
                }
                blocks.push((linear, constant));
            }
        }
        let mut x = random_matrix(rng, shape.0, shape.1);
        if !blocks.is_empty() {
            // Stack all constraints on X into one affine system.
            let stacked: Vec<(Matrix, Matrix)> =
                blocks.iter().map(|(linear, constant)| affine_rows(shape, linear, constant)).collect();
            let system = Matrix::vstack(&stacked.iter().map(|(m, _)| m).collect::<Vec<_>>(), shape.0 * shape.1);
            let rhs = Matrix::vstack(&stacked.iter().map(|(_, r)| r).collect::<Vec<_>>(), 1);
            let Some(particular) = system.solve(&rhs) else { return Ok(None) };
            let kernel = system.kernel();
            let weights = random_matrix(rng, kernel.cols(), 1);
            let v = &particular + &(&kernel * &weights);
            x = Matrix::from_fn(shape.0, shape.1, |r, c| v.get(r * shape.1 + c, 0).clone());
        }
        sampled[k] = Some(x);
    }
    let matrices: Vec<Matrix> = sampled.into_iter().map(|m| m.expect("every arrow sampled")).collect();
    let rep = Representation::new(q.clone(), alpha.clone(), matrices)?;
    Ok(rep.check_relations(rho)?.then_some(rep))
}

/// The linear system and right-hand side of Σ c·P·X·S = −C in vectorized form.
fn affine_rows(shape: (usize, usize), linear: &[LinearTerm], constant: &Matrix) -> (Matrix, Matrix) {
    let (h, t) = shape;
    let (rows, cols) = constant.shape();
    let mut system = Matrix::zeros(rows * cols, h * t);
    let mut rhs = Matrix::zeros(rows * cols, 1);
    for i in 0..rows {
        for j in 0..cols {
            let eq = i * cols + j;
            rhs.set(eq, 0, -constant.get(i, j).clone());
            for (c, p, s) in linear {
                for r in 0..h {
                    for k in 0..t {
                        let x = c * p.get(i, r) * s.get(k, j);
                        let slot = system.get(eq, r * t + k) + &x;
                        system.set(eq, r * t + k, slot);
                    }
                }
            }
        }
    }
    (system, rhs)
}
