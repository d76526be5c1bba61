//! The realization `ρ'_N` of the generators `ξ_0, η_0, ξ(z), η(z)` on the
//! exterior algebra, the currents `I_μ^{(N)}(z)` and the kernel relations.

use std::sync::Arc;

use mincyc_core::perm::combinations;
use mincyc_core::{GaussianRational, MPoly, VarContext, VerificationOutcome};

use crate::current::{current_context, factor_poly, z_coefficients, Den, GrassmannCurrent, RatFn};
use crate::error::FermionError;
use crate::grassmann::{mask_to_indices, GrassmannElem};

/// The four generators with an image under `ρ'_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Xi0,
    Eta0,
    XiCurrent,
    EtaCurrent,
}

fn z_monomial(ctx: &Arc<VarContext>, zi: usize, js: &[usize], zpow: u16) -> MPoly {
    let mut e = vec![0u16; ctx.len()];
    for &j in js {
        e[j] += 1;
    }
    e[zi] = zpow;
    MPoly::monomial(ctx, e, GaussianRational::from_int(1))
}

/// `c_a(z) = z_a z/(1 − z_a z) Π_{j>a} (1 + z_j z)/(1 − z_j z)`, 1-based `a`.
pub fn c_single(n: usize, a: usize) -> RatFn {
    let ctx = current_context(n);
    let zi = n;
    let mut num = z_monomial(&ctx, zi, &[a - 1], 1);
    let mut den = Den::single(a - 1, 1);
    for j in a..n {
        num = &num * &factor_poly(&ctx, zi, j, -1);
        den = den.times(&Den::single(j, 1));
    }
    RatFn { num, den }
}

/// `c_{a,b}(z) = z_a z/(1 − z_a z) Π_{a<j<b} (1 + z_j z)/(1 − z_j z) · z_b z/(1 − z_b z)`.
pub fn c_pair(n: usize, a: usize, b: usize) -> RatFn {
    assert!(a < b);
    let ctx = current_context(n);
    let zi = n;
    let mut num = z_monomial(&ctx, zi, &[a - 1, b - 1], 2);
    let mut den = Den::single(a - 1, 1).times(&Den::single(b - 1, 1));
    for j in a..b - 1 {
        num = &num * &factor_poly(&ctx, zi, j, -1);
        den = den.times(&Den::single(j, 1));
    }
    RatFn { num, den }
}

/// `c_A(z)`: consecutive pairs of `A` through [`c_pair`], with a trailing
/// [`c_single`] when `#A` is odd.
pub fn c_subset(n: usize, a: &[usize]) -> RatFn {
    let ctx = current_context(n);
    let mut acc = RatFn::poly(MPoly::one(&ctx));
    let mut k = 0;
    while k + 1 < a.len() {
        acc = acc.mul(&c_pair(n, a[k], a[k + 1]));
        k += 2;
    }
    if k < a.len() {
        acc = acc.mul(&c_single(n, a[k]));
    }
    acc
}

fn sign_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_A r_A ψ_A` as a single current over the least common denominator.
pub fn current_from_terms(n: usize, terms: Vec<(u32, RatFn)>) -> GrassmannCurrent {
    let ctx = current_context(n);
    let zi = n;
    let mut acc = GrassmannCurrent::polynomial(GrassmannElem::zero(n, &ctx), zi);
    for (mask, r) in terms {
        let c = GrassmannCurrent::new(GrassmannElem::monomial(n, mask, r.num), r.den, zi);
        acc = acc.add(&c);
    }
    acc
}

/// The image of a generator under `ρ'_N`, in the context `z1..zN, z`.
pub fn rho_generator(n: usize, g: Generator) -> GrassmannCurrent {
    let ctx = current_context(n);
    let zi = n;
    match g {
        Generator::Xi0 => {
            let mut e = GrassmannElem::zero(n, &ctx);
            for a in 1..=n {
                e.add_term(1 << (a - 1), MPoly::from_int(&ctx, sign_pow(n - a)));
            }
            GrassmannCurrent::polynomial(e, zi)
        }
        Generator::Eta0 => {
            let mut e = GrassmannElem::zero(n, &ctx);
            for a in 1..=n {
                for b in a + 1..=n {
                    e.add_term((1 << (a - 1)) | (1 << (b - 1)), MPoly::from_int(&ctx, sign_pow(a + b)));
                }
            }
            GrassmannCurrent::polynomial(e, zi)
        }
        Generator::XiCurrent => current_from_terms(n, (1..=n).map(|a| (1u32 << (a - 1), c_single(n, a))).collect()),
        Generator::EtaCurrent => {
            let mut terms = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    terms.push(((1u32 << (a - 1)) | (1 << (b - 1)), c_pair(n, a, b)));
                }
            }
            current_from_terms(n, terms)
        }
    }
}

fn power(base: &GrassmannCurrent, k: usize) -> GrassmannCurrent {
    let mut acc = GrassmannCurrent::polynomial(GrassmannElem::one(base.n(), base.ctx()), base.z_index());
    for _ in 0..k {
        acc = acc.mul(base).normalize();
    }
    acc
}

/// `ρ'_N` of the unmultiplied currents
/// `(ξ_0 + ξ(z))(η_0 + η(z))^ν` for `μ = 2ν+1` and
/// `(η_0 + η(z))^ν + ν ξ_0 ξ(z)(η_0 + η(z))^{ν−1}` for `μ = 2ν`.
pub fn rho_current_j(n: usize, mu: usize) -> GrassmannCurrent {
    assert!(mu >= 1);
    let xi0 = rho_generator(n, Generator::Xi0);
    let xi = rho_generator(n, Generator::XiCurrent);
    let eta_bar = rho_generator(n, Generator::Eta0).add(&rho_generator(n, Generator::EtaCurrent));
    let nu = mu / 2;
    if mu % 2 == 1 {
        xi0.add(&xi).mul(&power(&eta_bar, nu)).normalize()
    } else {
        let second = xi0.mul(&xi).mul(&power(&eta_bar, nu - 1)).scale(&GaussianRational::from_int(nu as i64));
        power(&eta_bar, nu).add(&second).normalize()
    }
}

/// `Π_j (1 − z_j z) · ρ'_N(I_μ^{(N)}(z))`, which must be a polynomial in `z`.
/// Returns its coefficients by power of `z`, indexed from 0.
pub fn current_i(n: usize, mu: usize) -> Result<Vec<GrassmannElem>, FermionError> {
    let poly = rho_current_j(n, mu).times_theta(1).into_polynomial()?;
    let zi = n;
    let by_power = z_coefficients(&poly, zi);
    let top = by_power.keys().next_back().copied().unwrap_or(0) as usize;
    Ok((0..=top)
        .map(|k| by_power.get(&(k as u16)).cloned().unwrap_or_else(|| GrassmannElem::zero(n, poly.ctx())))
        .collect())
}

/// Checks `ρ'_N(ξ(z)η(z)^ν)/ν! = Σ_{#A=2ν+1} ψ_A c_A(z)` and
/// `ρ'_N(η(z)^ν)/ν! = Σ_{#A=2ν} ψ_A c_A(z)` for `ν ≤ nu_max`.
pub fn verify_polynomial_rep(n: usize, nu_max: usize) -> VerificationOutcome {
    let xi = rho_generator(n, Generator::XiCurrent);
    let eta = rho_generator(n, Generator::EtaCurrent);
    let mut checks = 0;
    let mut fact = 1i64;
    for nu in 0..=nu_max {
        if nu > 0 {
            fact *= nu as i64;
        }
        let inv = GaussianRational::from_frac(1, fact);
        let eta_pow = power(&eta, nu);
        for (odd, lhs) in [(false, eta_pow.scale(&inv)), (true, xi.mul(&eta_pow).scale(&inv))] {
            let size = 2 * nu + usize::from(odd);
            let terms: Vec<(u32, RatFn)> = if size <= n {
                combinations(n, size)
                    .into_iter()
                    .map(|s| {
                        let a: Vec<usize> = s.iter().map(|i| i + 1).collect();
                        let mask = a.iter().map(|&i| 1u32 << (i - 1)).sum();
                        (mask, c_subset(n, &a))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let rhs = current_from_terms(n, terms);
            if !lhs.equals(&rhs) {
                return VerificationOutcome::fail(
                    "sum of psi_A c_A(z)",
                    lhs.normalize(),
                    format!("N={} nu={} odd={}", n, nu, odd),
                );
            }
            checks += 1;
        }
    }
    VerificationOutcome::pass(format!("{} identities", checks), format!("{} identities", checks))
}

/// The three kernel families: the `ξξ + η − η` relation, `η_1 ∈ Ker`, and
/// the vanishing of `[I_μ(z)]_{≥N−μ+1}` for `1 ≤ μ ≤ N+2`.
pub fn verify_kernel_relations(n: usize) -> VerificationOutcome {
    let xi = rho_generator(n, Generator::XiCurrent);
    let eta = rho_generator(n, Generator::EtaCurrent);
    let rel = xi.mul(&xi.negate_z()).add(&eta).sub(&eta.negate_z());
    if !rel.is_zero() {
        return VerificationOutcome::fail("0", rel.normalize(), "xi(z)xi(-z) + eta(z) - eta(-z)");
    }
    let eta1 = &eta.series(1)[1];
    if !eta1.is_zero() {
        return VerificationOutcome::fail("0", eta1, "eta_1");
    }
    let mut checked = 0usize;
    for mu in 1..=n + 2 {
        let coeffs = match current_i(n, mu) {
            Ok(c) => c,
            Err(e) => return VerificationOutcome::fail("polynomial current", e, format!("mu={}", mu)),
        };
        let start = (n as i64 - mu as i64 + 1).max(0) as usize;
        for (k, c) in coeffs.iter().enumerate().skip(start) {
            if let Some((&mask, p)) = c.terms().iter().next() {
                return VerificationOutcome::fail(
                    "0",
                    p,
                    format!("mu={} exponent={} subset={:?}", mu, k, mask_to_indices(mask)),
                );
            }
            checked += 1;
        }
    }
    VerificationOutcome::pass("all relations vanish", "all relations vanish")
        .with_detail(format!("N={}: {} current coefficients checked", n, checked))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_fermion_images() {
        let ctx = current_context(1);
        assert_eq!(rho_generator(1, Generator::Xi0).numer(), &GrassmannElem::psi(1, &ctx, 1));
        assert!(rho_generator(1, Generator::Eta0).is_zero());
        let xi = rho_generator(1, Generator::XiCurrent);
        assert_eq!(xi.to_string(), "[(z1*z)*psi1] / [(1 - z1*z)]");
    }

    #[test]
    fn currents_at_one_fermion() {
        let i1 = current_i(1, 1).unwrap();
        assert_eq!(i1.len(), 1);
        assert_eq!(i1[0], GrassmannElem::psi(1, &current_context(1), 1));
        for mu in 2..=4 {
            assert!(current_i(1, mu).unwrap().iter().all(|c| c.is_zero()), "mu={}", mu);
        }
    }
}
