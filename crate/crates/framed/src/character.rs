//! Characters θ, κ of the representation category and the slope μ = θ/κ.

use algebra_core::{ratio, Scalar};

use crate::error::FramedError;

/// Integer weights θ together with a positivity form κ (nonnegative weights).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub weights: Vec<i64>,
    pub positivity: Vec<i64>,
}

impl Character {
    pub fn new(weights: Vec<i64>, positivity: Vec<i64>) -> Result<Self, FramedError> {
        if weights.len() != positivity.len() {
            return Err(FramedError::CharacterLength { expected: weights.len(), found: positivity.len() });
        }
        if let Some(i) = positivity.iter().position(|&k| k < 0) {
            return Err(FramedError::NegativePositivity(i + 1));
        }
        Ok(Character { weights, positivity })
    }

    pub fn theta(&self, d: &[usize]) -> i64 {
        pair(&self.weights, d)
    }

    pub fn kappa(&self, d: &[usize]) -> i64 {
        pair(&self.positivity, d)
    }

    /// μ(d) = θ(d)/κ(d), or None when κ(d) = 0.
    pub fn slope(&self, d: &[usize]) -> Option<Scalar> {
        let k = self.kappa(d);
        (k != 0).then(|| ratio(self.theta(d), k))
    }
}

fn pair(w: &[i64], d: &[usize]) -> i64 {
    w.iter().zip(d).map(|(&a, &b)| a * b as i64).sum()
}

/// ξ′(d) = θ(α)κ(d) − κ(α)θ(d), i.e. κ(α)·(μ(α)κ(d) − θ(d)); the positivity form is kept.
pub fn slope_to_character(theta: &Character, alpha: &[usize]) -> Result<Character, FramedError> {
    if alpha.len() != theta.weights.len() {
        return Err(FramedError::CharacterLength { expected: theta.weights.len(), found: alpha.len() });
    }
    let ka = theta.kappa(alpha);
    if ka == 0 {
        return Err(FramedError::ZeroPositivity);
    }
    let ta = theta.theta(alpha);
    let weights = theta.weights.iter().zip(&theta.positivity).map(|(&t, &k)| ta * k - ka * t).collect();
    Ok(Character { weights, positivity: theta.positivity.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_characters_give_zero() {
        let c = Character::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap();
        assert_eq!(slope_to_character(&c, &[1, 1, 1]).unwrap().weights, vec![0, 0, 0]);
    }

    #[test]
    fn framed_slope() {
        // Vertices 1, 2 and ∞; θ = −d_∞, κ = Σ d.
        let c = Character::new(vec![0, 0, -1], vec![1, 1, 1]).unwrap();
        let alpha = [2, 1, 1];
        let xi = slope_to_character(&c, &alpha).unwrap();
        let ka = c.kappa(&alpha);
        for d in [[1, 0, 0], [0, 1, 1], [2, 1, 1], [0, 0, 1]] {
            let expected = ka * d[2] as i64 - c.kappa(&d);
            assert_eq!(xi.theta(&d), expected);
        }
        assert_eq!(xi.theta(&alpha), 0);
    }

    #[test]
    fn rejects_zero_positivity() {
        let c = Character::new(vec![1, 1], vec![0, 1]).unwrap();
        assert_eq!(slope_to_character(&c, &[3, 0]), Err(FramedError::ZeroPositivity));
        assert!(Character::new(vec![1], vec![-1]).is_err());
    }
}
