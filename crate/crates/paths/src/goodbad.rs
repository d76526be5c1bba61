//! Multiplicity bookkeeping for the good/bad splitting
//! `V^{⊗n} = G_n ⊕ B_n` at level `r`.

use mincyc_core::VerificationOutcome;

use crate::path::count_restricted;

/// Multiplicities of the summands of `G_n` and `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodBad {
    pub r: usize,
    pub n: usize,
    /// Multiplicity of `V^s = V^s(1)` in `G_n`, `s = 0..=r−2`.
    pub good: Vec<u128>,
    /// Multiplicity of `W^{r−1}(α)` in `B_n`, indexed by `α = +1, −1`.
    pub w_top: [u128; 2],
    /// Multiplicity of `X^s(α)` in `B_n`, `[α][s]`.
    pub x: [Vec<u128>; 2],
}

fn sign_index(alpha: i64) -> usize {
    usize::from(alpha < 0)
}

impl GoodBad {
    pub fn dim_good(&self) -> u128 {
        self.good.iter().enumerate().map(|(s, &m)| m * (s as u128 + 1)).sum()
    }

    pub fn dim_bad(&self) -> u128 {
        let r = self.r as u128;
        (self.w_top[0] + self.w_top[1]) * r + self.x.iter().flatten().sum::<u128>() * 2 * r
    }

    /// `G_1 = V`, `B_1 = 0`.
    pub fn first(r: usize) -> GoodBad {
        let mut good = vec![0; r - 1];
        good[1] = 1;
        GoodBad { r, n: 1, good, w_top: [0, 0], x: [vec![0; r - 1], vec![0; r - 1]] }
    }

    /// Tensors with `V` using the decomposition rules, sending the
    /// `W^{r−1}(1)` produced by `V^{r−2} ⊗ V` to the bad part.
    pub fn step(&self) -> GoodBad {
        let r = self.r;
        let top = r - 2;
        let mut good = vec![0u128; r - 1];
        let mut w_top = [0u128; 2];
        let mut x = [vec![0u128; r - 1], vec![0u128; r - 1]];
        for (s, &m) in self.good.iter().enumerate() {
            if s < top {
                good[s + 1] += m;
            } else {
                w_top[sign_index(1)] += m;
            }
            if s > 0 {
                good[s - 1] += m;
            }
        }
        for alpha in [1i64, -1] {
            let ai = sign_index(alpha);
            // W^{r−1}(α) ⊗ V = X^0(α).
            x[ai][0] += self.w_top[ai];
            for s in 0..=top {
                let m = self.x[ai][s];
                if s < top {
                    x[ai][s + 1] += m;
                } else {
                    w_top[ai] += 2 * m;
                }
                if s > 0 {
                    x[ai][s - 1] += m;
                } else {
                    w_top[sign_index(-alpha)] += 2 * m;
                }
            }
        }
        GoodBad { r, n: self.n + 1, good, w_top, x }
    }
}

/// Iterates the recursion up to `n`.
pub fn goodbad_dims(r: usize, n: usize) -> GoodBad {
    let mut g = GoodBad::first(r);
    while g.n < n {
        g = g.step();
    }
    g
}

/// `dim G_n + dim B_n = 2^n` and the multiplicity of `V^m` in `G_n`
/// equals the `r`-restricted path count.
pub fn verify_goodbad(r: usize, n: usize) -> VerificationOutcome {
    let g = goodbad_dims(r, n);
    let total = g.dim_good() + g.dim_bad();
    let label = format!("r={} n={}", r, n);
    if total != 1u128 << n {
        return VerificationOutcome::fail(1u128 << n, total, format!("{}: dim G + dim B", label));
    }
    let counts: Vec<u128> = (0..=r as i64 - 2).map(|m| count_restricted(r, n, m).0).collect();
    if counts != g.good {
        return VerificationOutcome::fail(format!("{:?}", counts), format!("{:?}", g.good), format!("{}: multiplicities", label));
    }
    VerificationOutcome::pass(format!("{:?}", counts), format!("{:?}", g.good)).with_detail(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_step() {
        let g = goodbad_dims(4, 1);
        assert_eq!(g.dim_good(), 2);
        assert_eq!(g.dim_bad(), 0);
    }

    #[test]
    fn level_three_two_sites() {
        // V ⊗ V at r = 3: V^1 ⊗ V = V^0 ⊕ W^2(1).
        let g = goodbad_dims(3, 2);
        assert_eq!(g.good, vec![1, 0]);
        assert_eq!(g.w_top, [1, 0]);
    }
}
