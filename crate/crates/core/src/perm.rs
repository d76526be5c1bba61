//! Small permutation helpers shared by the symmetrizers.

/// All permutations of `0..n` in lexicographic order, each with its sign.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push((cur.clone(), sign_of(&cur)));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Sign of a permutation via its inversion count.
pub fn sign_of(p: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Subsets of size `k` of `0..n`, each as an increasing vector, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `n!` as a u64.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Partitions of `d` with at most `max_parts` parts, each part at most
/// `max_part`, as weakly decreasing vectors, in reverse lexicographic order.
pub fn partitions(d: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, parts_left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        let top = cap.min(rem);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(rem - p, parts_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts_and_signs() {
        let p = permutations_with_sign(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(sign_of(&[1, 0, 2]), -1);
    }

    #[test]
    fn combination_counts() {
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(combinations(n, k).len() as i64, binomial(n as i64, k as i64));
            }
        }
        assert_eq!(combinations(4, 2)[0], vec![0, 1]);
        assert_eq!(combinations(4, 2)[5], vec![2, 3]);
    }

    #[test]
    fn partition_counts() {
        // p(6) = 11; into at most 2 parts: 4.
        assert_eq!(partitions(6, 6, 6).len(), 11);
        assert_eq!(partitions(6, 2, 6).len(), 4);
        assert_eq!(partitions(0, 0, 0), vec![Vec::<usize>::new()]);
    }
}
