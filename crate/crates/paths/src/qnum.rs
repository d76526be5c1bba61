//! Complex scalars and q-integers for the numeric checks.

use num_complex::Complex64;

pub type Scalar = Complex64;

/// Default residual tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `e^{−iπ/ξ}` at `ξ = π`, used wherever a generic point on the unit
/// circle is needed.
pub fn generic_q() -> Scalar {
    Complex64::from_polar(1.0, -1.0)
}

/// `ε = e^{−iπ/r}`.
pub fn root_of_unity(r: usize) -> Scalar {
    Complex64::from_polar(1.0, -std::f64::consts::PI / r as f64)
}

/// `q^x` on the principal branch of `log q`.
pub fn qpow(q: Scalar, x: f64) -> Scalar {
    (q.ln() * x).exp()
}

/// `[x] = (q^x − q^{−x})/(q − q^{−1})`.
pub fn qint(q: Scalar, x: f64) -> Scalar {
    (qpow(q, x) - qpow(q, -x)) / (q - q.inv())
}

/// `[x]` for a complex argument `x`.
pub fn qint_complex(q: Scalar, x: Scalar) -> Scalar {
    let lq = q.ln();
    ((lq * x).exp() - (-lq * x).exp()) / (q - q.inv())
}
