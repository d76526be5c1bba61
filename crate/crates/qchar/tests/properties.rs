use mincyc_qchar::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pascal_rule_holds(n in 1i64..16, l in 0i64..16) {
        let lhs = gaussian_binomial(n, l);
        let rhs = &gaussian_binomial(n - 1, l - 1) + &gaussian_binomial(n - 1, l).shift(l);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kostka_at_one_is_a_binomial_difference(n in 0i64..14, m in 0i64..14) {
        let k = kostka_closed(m, n);
        let expect = if (n - m) % 2 == 0 && m <= n {
            binom(n, (n - m) / 2) - binom(n, (n - m - 2) / 2)
        } else {
            0
        };
        prop_assert_eq!(k.eval_at_one(), mincyc_core::rat(expect));
    }
}

fn binom(n: i64, k: i64) -> i64 {
    mincyc_core::perm::binomial(n, k)
}
