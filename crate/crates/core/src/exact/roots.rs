//! Rational-root extraction by divisor enumeration.
//!
//! The polynomial is cleared to a primitive integer form; candidates `±d/e`
//! with `d` dividing the constant term and `e` dividing the leading
//! coefficient are tested by exact evaluation, so a reported root is always
//! a true root and no candidate is skipped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use super::upoly::UPoly;
use super::ExactError;

/// All rational roots of `p` with multiplicities, sorted ascending.
pub fn rational_roots(p: &UPoly) -> Result<Vec<(Rat, usize)>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(rational_roots_inner(p, u64::MAX).expect("unbounded budget"))
}

/// Budgeted variant for the elimination pipeline, where constant terms can
/// be hundreds of bits wide: gives up (returns `None`) when factoring the
/// end coefficients would exceed `budget` trial divisions.
pub fn rational_roots_budgeted(p: &UPoly, budget: u64) -> Option<Vec<(Rat, usize)>> {
    if p.is_zero() {
        return None;
    }
    rational_roots_inner(p, budget)
}

fn rational_roots_inner(p: &UPoly, budget: u64) -> Option<Vec<(Rat, usize)>> {
    let prim = p.primitive();
    let zero_mult = prim.zero_root_multiplicity();
    let reduced = prim.shift_down(zero_mult);

    let mut roots: Vec<(Rat, usize)> = Vec::new();
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult));
    }
    if reduced.degree() == Some(0) || reduced.is_zero() {
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        return Some(roots);
    }

    let a0 = reduced.coeff(0).numer().abs();
    let an = reduced.leading().unwrap().numer().abs();
    let num_divs = divisors(&a0, budget)?;
    let den_divs = divisors(&an, budget)?;

    for d in &num_divs {
        for e in &den_divs {
            if !d.gcd(e).is_one() {
                continue;
            }
            for sgn in [1i64, -1] {
                let cand = Rat::new(d * BigInt::from(sgn), e.clone());
                if !reduced.eval(&cand).is_zero() {
                    continue;
                }
                if roots.iter().any(|(r, _)| *r == cand) {
                    continue;
                }
                // multiplicity by repeated exact deflation
                let lin = UPoly::new(vec![-cand.clone(), Rat::one()]);
                let mut mult = 0usize;
                let mut rem = reduced.clone();
                loop {
                    let (q, r) = rem.div_rem(&lin);
                    if !r.is_zero() {
                        break;
                    }
                    mult += 1;
                    rem = q;
                }
                roots.push((cand, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Some(roots)
}

/// All positive divisors of `|n|` via trial-division factorization, or
/// `None` if the factorization exceeds the trial budget.
fn divisors(n: &BigInt, budget: u64) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "constant term of a zero-root-free polynomial");
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut steps = 0u64;
    let push = |p: BigInt, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = factors.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        factors.push((p, 1));
    };
    let two = BigInt::from(2);
    while (&n % &two).is_zero() {
        n /= &two;
        push(two.clone(), &mut factors);
    }
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        steps += 1;
        if steps > budget {
            return None;
        }
        if (&n % &d).is_zero() {
            n /= &d;
            push(d.clone(), &mut factors);
        } else {
            d += 2;
        }
    }
    if !n.is_one() {
        push(n, &mut factors);
    }

    let mut divs = vec![BigInt::one()];
    for (p, k) in factors {
        let mut next = Vec::with_capacity(divs.len() * (k as usize + 1));
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=k {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> UPoly {
        UPoly::from_i64(coeffs)
    }

    #[test]
    fn paper_cubic_has_no_rational_roots() {
        // 570 = 2 * 3 * 5 * 19, so 32 candidates get enumerated; none is a root.
        let roots = rational_roots(&p(&[-570, 259, 74, 1])).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn true_characteristic_cubic_has_no_rational_roots() {
        // the eliminant of the worked instance: 45s^3 - 66s^2 + 11s + 14
        let roots = rational_roots(&p(&[14, 11, -66, 45])).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn simple_factored_examples() {
        // (t-1)(t+2)
        let roots = rational_roots(&(&p(&[-1, 1]) * &p(&[2, 1]))).unwrap();
        assert_eq!(roots, vec![(rat(-2, 1), 1), (rat(1, 1), 1)]);
        // 6t^2 - 5t + 1 = (2t-1)(3t-1)
        let roots = rational_roots(&p(&[1, -5, 6])).unwrap();
        assert_eq!(roots, vec![(rat(1, 3), 1), (rat(1, 2), 1)]);
    }

    #[test]
    fn zero_roots_and_multiplicities() {
        // t^2 (t - 1)^3
        let q = &(&p(&[0, 0, 1]) * &p(&[-1, 1])) * &(&p(&[-1, 1]) * &p(&[-1, 1]));
        let roots = rational_roots(&q).unwrap();
        assert_eq!(roots, vec![(rat(0, 1), 2), (rat(1, 1), 3)]);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            rational_roots(&UPoly::zero()),
            Err(ExactError::ZeroPolynomial)
        );
    }

    #[test]
    fn budget_gives_up_gracefully() {
        // a large prime constant exhausts a tiny budget
        let q = p(&[1_000_003, 0, 1]);
        assert!(rational_roots_budgeted(&q, 3).is_none());
        assert!(rational_roots_budgeted(&q, 1 << 20).is_some());
    }

    proptest! {
        /// Every planted root of a product of linear factors is found, with
        /// nothing spurious.
        #[test]
        fn planted_roots_recovered(nums in proptest::collection::vec((-6i64..7, 1i64..5), 1..5)) {
            let mut poly = UPoly::one();
            let mut expect: Vec<Rat> = Vec::new();
            for (n, d) in nums {
                let r = rat(n, d);
                // factor (d*t - n) keeps coefficients integral
                poly = &poly * &UPoly::new(vec![rat(-n, 1), rat(d, 1)]);
                expect.push(r);
            }
            expect.sort();
            let got = rational_roots(&poly).unwrap();
            let mut flat: Vec<Rat> = Vec::new();
            for (r, m) in got {
                prop_assert!(poly.eval(&r).is_zero());
                for _ in 0..m { flat.push(r.clone()); }
            }
            flat.sort();
            prop_assert_eq!(flat, expect);
        }
    }
}
