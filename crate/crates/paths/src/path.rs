//! Paths of spin-½ heights and their counts.
//!
//! Heights are stored doubled: a path `(j_1, …, j_N)` is the vector
//! `(2j_1, …, 2j_N)` of non-negative integers.

use mincyc_core::VerificationOutcome;
use mincyc_qchar::{int_coeffs, kostka_closed, restricted_kostka};

/// Which paths are admitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// `j_n ≥ 0` for all `n`.
    Classical,
    /// Additionally `2j_n ≤ r − 2`.
    Level(usize),
}

impl Restriction {
    fn cap(self) -> i64 {
        match self {
            Restriction::Classical => i64::MAX,
            Restriction::Level(r) => r as i64 - 2,
        }
    }
}

/// A path `j_1 = ½, j_{n+1} = j_n ± ½`, stored as doubled heights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub twice: Vec<i64>,
}

impl Path {
    /// Validates the step rule; heights may be negative.
    pub fn new(twice: Vec<i64>) -> Option<Path> {
        let ok = twice.first() == Some(&1) && twice.windows(2).all(|w| (w[0] - w[1]).abs() == 1);
        ok.then_some(Path { twice })
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    /// `2j_N`.
    pub fn weight(&self) -> i64 {
        *self.twice.last().expect("paths have length at least 1")
    }

    pub fn is_classical(&self) -> bool {
        self.twice.iter().all(|&h| h >= 0)
    }

    /// Classical and `2j_n ≤ r − 2`.
    pub fn is_restricted(&self, r: usize) -> bool {
        self.is_classical() && self.twice.iter().all(|&h| h <= r as i64 - 2)
    }

    /// Renders heights as half-integers, e.g. `(1/2,1,1/2)`.
    pub fn display(&self) -> String {
        let parts: Vec<String> =
            self.twice.iter().map(|&h| if h % 2 == 0 { (h / 2).to_string() } else { format!("{}/2", h) }).collect();
        format!("({})", parts.join(","))
    }
}

/// All paths of length `n` and weight `m` under the restriction, in
/// lexicographic order of the heights.
pub fn enumerate_paths(n: usize, m: i64, restriction: Restriction) -> Vec<Path> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let cap = restriction.cap();
    let mut cur = vec![1i64];
    extend(n, m, cap, &mut cur, &mut out);
    out
}

fn extend(n: usize, m: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Path>) {
    let h = *cur.last().expect("nonempty");
    if h < 0 || h > cap {
        return;
    }
    let remaining = (n - cur.len()) as i64;
    if (h - m).abs() > remaining {
        return;
    }
    if remaining == 0 {
        out.push(Path { twice: cur.clone() });
        return;
    }
    for next in [h - 1, h + 1] {
        cur.push(next);
        extend(n, m, cap, cur, out);
        cur.pop();
    }
}

/// Path count by the transfer-matrix recursion over doubled heights.
pub fn count_paths(n: usize, m: i64, restriction: Restriction) -> u128 {
    if n == 0 || m < 0 {
        return 0;
    }
    let cap = restriction.cap().min(n as i64);
    if cap < 1 {
        return 0;
    }
    let size = cap as usize + 1;
    let mut v = vec![0u128; size];
    v[1] = 1;
    for _ in 1..n {
        let mut w = vec![0u128; size];
        for (h, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if h >= 1 {
                w[h - 1] += c;
            }
            if h + 1 < size {
                w[h + 1] += c;
            }
        }
        v = w;
    }
    if m as usize >= size {
        0
    } else {
        v[m as usize]
    }
}

/// `C(N, (N−m)/2) − C(N, (N−m−2)/2)`, zero unless `N ≡ m` mod 2.
pub fn classical_closed_form(n: usize, m: i64) -> u128 {
    let n = n as i64;
    if m < 0 || m > n || (n - m) % 2 != 0 {
        return 0;
    }
    let b = |k: i64| -> u128 {
        if k < 0 || k > n {
            return 0;
        }
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    };
    b((n - m) / 2) - b((n - m - 2) / 2)
}

/// The `r`-restricted count by transfer matrix, checked against
/// enumeration (for `N ≤ 12`) and against `K^{(r−2)}_{m,(1^N)}(1)`.
pub fn count_restricted(r: usize, n: usize, m: i64) -> (u128, VerificationOutcome) {
    let count = count_paths(n, m, Restriction::Level(r));
    let label = format!("r={} N={} m={}", r, n, m);
    if n <= 12 {
        let listed = enumerate_paths(n, m, Restriction::Level(r)).len() as u128;
        if listed != count {
            return (count, VerificationOutcome::fail(listed, count, format!("{}: enumeration", label)));
        }
    }
    let kostka: i64 = if m < 0 || r < 3 { 0 } else { int_coeffs(&restricted_kostka(r - 2, m, n)).iter().sum() };
    let out = if kostka as u128 == count {
        VerificationOutcome::pass(kostka, count).with_detail(label)
    } else {
        VerificationOutcome::fail(kostka, count, format!("{}: restricted Kostka at q = 1", label))
    };
    (count, out)
}

/// Classical counts agree between enumeration, transfer matrix, the closed
/// binomial form and `K_{m,(1^N)}(1)`.
pub fn verify_classical_count(n: usize, m: i64) -> VerificationOutcome {
    let listed = enumerate_paths(n, m, Restriction::Classical).len() as u128;
    let transfer = count_paths(n, m, Restriction::Classical);
    let closed = classical_closed_form(n, m);
    let kostka: i64 = if m < 0 { 0 } else { int_coeffs(&kostka_closed(m, n as i64)).iter().sum() };
    let label = format!("N={} m={}", n, m);
    if listed == transfer && transfer == closed && closed == kostka as u128 {
        VerificationOutcome::pass(closed, listed).with_detail(label)
    } else {
        VerificationOutcome::fail(
            format!("closed {} kostka {}", closed, kostka),
            format!("enumerated {} transfer {}", listed, transfer),
            label,
        )
    }
}

/// The path `(½,0,…,½,0,½,1,…,(N−2l)/2)` with `l` initial `½,0` pairs.
pub fn special_path(n: usize, l: usize) -> Option<Path> {
    if 2 * l > n {
        return None;
    }
    let mut twice = Vec::with_capacity(n);
    for _ in 0..l {
        twice.extend([1, 0]);
    }
    for k in 1..=(n - 2 * l) as i64 {
        twice.push(k);
    }
    Some(Path { twice })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_step_paths() {
        let c = enumerate_paths(3, 1, Restriction::Classical);
        assert_eq!(c.iter().map(Path::display).collect::<Vec<_>>(), vec!["(1/2,0,1/2)", "(1/2,1,1/2)"]);
        let r = enumerate_paths(3, 1, Restriction::Level(3));
        assert_eq!(r.iter().map(Path::display).collect::<Vec<_>>(), vec!["(1/2,0,1/2)"]);
        assert_eq!(count_paths(3, 1, Restriction::Level(3)), 1);
    }

    #[test]
    fn weight_above_cap_is_empty() {
        assert_eq!(count_paths(5, 3, Restriction::Level(4)), 0);
        assert!(enumerate_paths(5, 3, Restriction::Level(4)).is_empty());
    }

    #[test]
    fn special_path_shape() {
        assert_eq!(special_path(5, 2).unwrap().twice, vec![1, 0, 1, 0, 1]);
        assert_eq!(special_path(4, 1).unwrap().twice, vec![1, 0, 1, 2]);
        assert!(special_path(3, 2).is_none());
    }
}
