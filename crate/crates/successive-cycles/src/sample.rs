//! Seeded representations of a successive-cycle quiver with prescribed cycle spectra.

use cyclic_fibers::{sample_cyclic_representation, CyclicQuiverSpec};
use framed::{is_stable, FramedRep};
use rand::Rng;
use rep_core::{random_matrix, Representation};

use crate::decomposition::SuccessiveDecomposition;
use crate::error::SuccessiveError;
use crate::roots::MultiRootData;

/// Cycle blocks drawn with the cyclic sampler, base arrows with independent entries.
pub fn sample_successive_representation(
    decomp: &SuccessiveDecomposition,
    mrd: &MultiRootData,
    rng: &mut impl Rng,
) -> Result<Representation, SuccessiveError> {
    mrd.validate(decomp)?;
    let q = &decomp.quiver;
    let alpha = mrd.alpha(decomp);
    let mut matrices: Vec<_> = q.arrows().iter().map(|a| random_matrix(rng, alpha[a.head - 1], alpha[a.tail - 1])).collect();
    for (comp, rd) in decomp.components.iter().zip(&mrd.components) {
        if !comp.is_cycle() {
            continue;
        }
        let n = comp.cycle_length();
        let local: Vec<usize> = comp.vertices.iter().map(|&v| alpha[v - 1]).collect();
        let spec = CyclicQuiverSpec::new(n, local, vec![0; n])?;
        let x = sample_cyclic_representation(&spec, rd, rng)?;
        for (t, &k) in comp.cycle_arrows.iter().enumerate() {
            matrices[k] = x.matrix(t).clone();
        }
    }
    Ok(Representation::new(q.clone(), alpha, matrices)?)
}

pub fn sample_stable_successive(
    decomp: &SuccessiveDecomposition,
    mrd: &MultiRootData,
    zeta: &[usize],
    rng: &mut impl Rng,
    attempts: usize,
) -> Result<FramedRep, SuccessiveError> {
    for _ in 0..attempts {
        let x = sample_successive_representation(decomp, mrd, rng)?;
        let fr = FramedRep::random(x, zeta.to_vec(), rng)?;
        if is_stable(&fr) {
            return Ok(fr);
        }
    }
    Err(SuccessiveError::NoStableSample(attempts))
}
