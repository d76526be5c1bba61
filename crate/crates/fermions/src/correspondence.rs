//! The composite `x ↦ C_N(ϖ_N(x) v₊^{⊗N})` on the generators and the check
//! of its closed forms against the named cycles.

use std::sync::Arc;

use mincyc_core::{GaussianRational, MPoly, VarContext, VerificationOutcome};
use mincyc_cycles::{cmap, is_minimal, named_cycle, CyclePoly, NamedCycle};

use crate::current::{Den, GrassmannCurrent};
use crate::error::FermionError;
use crate::grassmann::{mask_to_indices, GrassmannElem};
use crate::rho::{rho_generator, Generator};

/// Generators of the current algebra whose images are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Word {
    /// `x_0^-`, realized as `ρ'(ξ_0)`.
    X0Minus,
    /// `(x_0^-)^{(2)}`, realized as `−i ρ'(η_0)`.
    X0MinusDiv2,
    /// The current `X(z)`, realized as `ρ'(ξ(z))`.
    XCurrent,
    /// The current `X(z)^{(2)}`, realized as `i ρ'(η(z))`.
    XCurrentDiv2,
    /// `x_1^-`, the `z^1` coefficient of `X(z)`.
    X1Minus,
    /// `(x_1^-)^{(2)}`, the `z^2` coefficient of `X(z)^{(2)}`.
    X1MinusDiv2,
}

/// The image of a word: a cycle, or a current-valued cycle `numer / den`
/// whose numerator lives in `X.., z1..zN, z`.
#[derive(Clone, Debug)]
pub enum RhoImage {
    Cycle(CyclePoly),
    Current { numer: MPoly, den: Den },
}

/// Applies `C_N` linearly to a Grassmann element of uniform fermion number
/// whose coefficients live in `z1..zN, z`. The result lives in
/// `X1..Xl, z1..zN, z`.
pub fn cmap_elem(e: &GrassmannElem) -> Result<(usize, MPoly), FermionError> {
    let n = e.n();
    let mut weights = e.terms().keys().map(|m| m.count_ones());
    let l = match weights.next() {
        Some(w) => w,
        None => return Ok((0, MPoly::zero(&VarContext::cycle_with_aux(0, n, &["z"])))),
    };
    if let Some(w) = weights.find(|&w| w != l) {
        return Err(FermionError::MixedWeight(l, w));
    }
    let l = l as usize;
    let target = VarContext::cycle_with_aux(l, n, &["z"]);
    let cyc_map: Vec<Option<usize>> = (0..l + n).map(Some).collect();
    let coeff_map: Vec<Option<usize>> = (0..=n).map(|j| Some(l + j)).collect();
    let mut acc = MPoly::zero(&target);
    for (&mask, p) in e.terms() {
        let c = cmap(n, &mask_to_indices(mask))?;
        let term = &c.body().embed(&target, &cyc_map) * &p.embed(&target, &coeff_map);
        acc = &acc + &term;
    }
    Ok((l, acc))
}

/// Drops the (absent) `z` variable from a `cmap_elem` result.
fn to_cycle(n: usize, l: usize, p: &MPoly) -> Result<CyclePoly, FermionError> {
    let ctx = VarContext::cycle(l, n);
    let map: Vec<Option<usize>> = (0..l + n).map(Some).chain(std::iter::once(None)).collect();
    Ok(CyclePoly::from_body_unchecked(n, l, p.embed(&ctx, &map)))
}

fn cycle_of(e: &GrassmannElem) -> Result<CyclePoly, FermionError> {
    let (l, p) = cmap_elem(e)?;
    to_cycle(e.n(), l, &p)
}

/// Computes the image of a word under `C_N ∘ ϖ_N`.
pub fn rho_image(n: usize, word: Word) -> Result<RhoImage, FermionError> {
    let i = GaussianRational::i();
    let minus_i = -GaussianRational::i();
    match word {
        Word::X0Minus => Ok(RhoImage::Cycle(cycle_of(rho_generator(n, Generator::Xi0).numer())?)),
        Word::X0MinusDiv2 => {
            Ok(RhoImage::Cycle(cycle_of(&rho_generator(n, Generator::Eta0).numer().scale(&minus_i))?))
        }
        Word::XCurrent | Word::XCurrentDiv2 => {
            let (g, c) = if word == Word::XCurrent {
                (Generator::XiCurrent, GaussianRational::from_int(1))
            } else {
                (Generator::EtaCurrent, i)
            };
            let cur = rho_generator(n, g).scale(&c);
            let (_, numer) = cmap_elem(cur.numer())?;
            Ok(RhoImage::Current { numer, den: cur.den().clone() })
        }
        Word::X1Minus => {
            let s = rho_generator(n, Generator::XiCurrent).series(1);
            Ok(RhoImage::Cycle(cycle_of(&s[1])?))
        }
        Word::X1MinusDiv2 => {
            let s = rho_generator(n, Generator::EtaCurrent).series(2);
            Ok(RhoImage::Cycle(cycle_of(&s[2].scale(&i))?))
        }
    }
}

/// `Π_j (1 − s z_j v)` for a variable `v` of `ctx` whose `z` block starts at `z0`.
fn theta(ctx: &Arc<VarContext>, v: usize, z0: usize, n: usize, s: i64) -> MPoly {
    let mut acc = MPoly::one(ctx);
    for j in 0..n {
        let mut e = vec![0u16; ctx.len()];
        e[v] = 1;
        e[z0 + j] = 1;
        acc = &acc * &(&MPoly::one(ctx) - &MPoly::monomial(ctx, e, GaussianRational::from_int(s)));
    }
    acc
}

/// `Θ(s_a a, s_b b) = Θ(s_a a)Θ(s_b b) − Θ(−s_a a)Θ(−s_b b)`.
fn theta2(ctx: &Arc<VarContext>, (a, sa): (usize, i64), (b, sb): (usize, i64), z0: usize, n: usize) -> MPoly {
    &(&theta(ctx, a, z0, n, sa) * &theta(ctx, b, z0, n, sb)) - &(&theta(ctx, a, z0, n, -sa) * &theta(ctx, b, z0, n, -sb))
}

/// `Θ(z) · C_N(ρ'(current))`: the current lifted to the denominator
/// `Π_j (1 − z_j z)` and mapped.
fn cleared_image(n: usize, g: Generator) -> Result<MPoly, FermionError> {
    let cur: GrassmannCurrent = rho_generator(n, g).lift_to(&Den::theta(n, 1));
    Ok(cmap_elem(cur.numer())?.1)
}

fn check(out: &mut Vec<VerificationOutcome>, name: &str, expected: &MPoly, computed: &MPoly) {
    if expected == computed {
        out.push(VerificationOutcome::pass(name, name));
    } else {
        out.push(VerificationOutcome::fail(expected, computed, name));
    }
}

/// Checks the images of `x_0^-`, `(x_0^-)^{(2)}`, `x_1^-`, `(x_1^-)^{(2)}`
/// against `½Σ1`, `(i/4)Σ2`, `−½Γ1` and `Γ2/(−4i)`, and the two closed
/// current formulas after clearing `Θ(z)` and the linear denominators.
/// The two-fermion statements need `N ≥ 2` and are skipped below that.
pub fn verify_correspondence(n: usize) -> VerificationOutcome {
    match correspondence_checks(n) {
        Ok(parts) => {
            let count = parts.len();
            let out = VerificationOutcome::all(parts);
            if out.is_pass() {
                out.with_detail(format!("N={}: {} identities", n, count))
            } else {
                out
            }
        }
        Err(e) => VerificationOutcome::fail("computable images", "error", e),
    }
}

fn correspondence_checks(n: usize) -> Result<Vec<VerificationOutcome>, FermionError> {
    let mut out = Vec::new();
    let half = GaussianRational::from_frac(1, 2);
    let cyc = |w: Word| -> Result<CyclePoly, FermionError> {
        match rho_image(n, w)? {
            RhoImage::Cycle(c) => Ok(c),
            RhoImage::Current { .. } => unreachable!("scalar words give cycles"),
        }
    };

    let x0 = cyc(Word::X0Minus)?;
    let s1 = named_cycle(NamedCycle::Sigma1, n)?;
    check(&mut out, "x0- -> Sigma1/2", s1.scale(&half).body(), x0.body());
    if !is_minimal(&x0) {
        out.push(VerificationOutcome::fail("minimal", "not minimal", "image of x0-"));
    }

    let x1 = cyc(Word::X1Minus)?;
    let g1 = named_cycle(NamedCycle::Gamma1 { r: n as i64 }, n)?;
    check(&mut out, "x1- -> -Gamma1/2", g1.scale(&-half.clone()).body(), x1.body());

    // The current X(z): Θ(z)·2(X − z)·image = z·Θ(z, −X).
    {
        let ctx = VarContext::cycle_with_aux(1, n, &["z"]);
        let (x, zi) = (0, n + 1);
        let lhs_base = cleared_image(n, Generator::XiCurrent)?;
        let lhs_base = if lhs_base.is_zero() { MPoly::zero(&ctx) } else { lhs_base };
        let diff = &MPoly::var(&ctx, x) - &MPoly::var(&ctx, zi);
        let lhs = &lhs_base * &diff.scale(&GaussianRational::from_int(2));
        let rhs = &MPoly::var(&ctx, zi) * &theta2(&ctx, (zi, 1), (x, -1), 1, n);
        check(&mut out, "X(z) closed form", &rhs, &lhs);
    }

    if n >= 2 {
        let x0d = cyc(Word::X0MinusDiv2)?;
        let s2 = named_cycle(NamedCycle::Sigma2, n)?;
        let i4 = &GaussianRational::i() * &GaussianRational::from_frac(1, 4);
        check(&mut out, "(x0-)^(2) -> (i/4) Sigma2", s2.scale(&i4).body(), x0d.body());
        if !is_minimal(&x0d) {
            out.push(VerificationOutcome::fail("minimal", "not minimal", "image of (x0-)^(2)"));
        }

        let x1d = cyc(Word::X1MinusDiv2)?;
        let g2 = named_cycle(NamedCycle::Gamma2, n)?;
        let m4i = &GaussianRational::i() * &GaussianRational::from_int(-4);
        check(&mut out, "-4i (x1-)^(2) -> Gamma2", g2.body(), x1d.scale(&m4i).body());

        // The current X(z)^{(2)} = i ρ'(η(z)); after multiplying by
        // 4Θ(z)(X1+X2)(X1+z)(X2+z)(X1−z)(X2−z) and dividing by i both sides
        // are polynomials.
        let ctx = VarContext::cycle_with_aux(2, n, &["z"]);
        let (x1v, x2v, zi) = (0usize, 1usize, n + 2);
        let v = |k: usize| MPoly::var(&ctx, k);
        let (x1p, x2p, z) = (v(x1v), v(x2v), v(zi));
        let base = cleared_image(n, Generator::EtaCurrent)?;
        let lin = [&x1p + &x2p, &x1p + &z, &x2p + &z, &x1p - &z, &x2p - &z];
        let mut lhs = base.scale(&GaussianRational::from_int(4));
        for f in &lin {
            lhs = &lhs * f;
        }
        let z2 = &z * &z;
        let th_z = theta(&ctx, zi, 2, n, 1);
        let first = &(&(&(&th_z * &(&x1p - &x2p)) * &(&x1p - &z)) * &(&x2p - &z)) * &(&z2 * &theta2(&ctx, (x1v, 1), (x2v, 1), 2, n));
        let skew_a = &(&(&theta(&ctx, x2v, 2, n, -1) * &theta2(&ctx, (zi, 1), (x1v, -1), 2, n)) * &(&x1p + &z)) * &(&x2p - &z);
        let skew_b = &(&(&theta(&ctx, x1v, 2, n, -1) * &theta2(&ctx, (zi, 1), (x2v, -1), 2, n)) * &(&x2p + &z)) * &(&x1p - &z);
        let second = &(&(&x1p + &x2p) * &z2) * &(&skew_a - &skew_b);
        check(&mut out, "X(z)^(2) closed form", &(&first + &second), &lhs);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correspondence_small_n() {
        for n in 1..=3 {
            let out = verify_correspondence(n);
            assert!(out.is_pass(), "N={}: {:?}", n, out);
        }
    }
}
