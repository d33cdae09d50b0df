//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored low-to-high; the zero polynomial is the empty
//! vector and a nonzero polynomial never has a zero leading coefficient.
//! Degrees in this crate stay small (elimination tops out around degree 30),
//! so a dense representation is the right trade.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{rat_i64, rat_sign, rat_to_f64, Rat};
use super::ExactError;

/// Univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros so the representation invariant holds.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// `x^n` with coefficient `c`.
    pub fn monomial(c: Rat, n: usize) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        UPoly { coeffs }
    }

    /// Convenience constructor from integer coefficients, low-to-high.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating evaluation; reporting only, never used for decisions.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// Sign of the polynomial at `+inf` (sign of the leading coefficient).
    pub fn sign_at_pos_inf(&self) -> i32 {
        self.leading().map_or(0, rat_sign)
    }

    /// Sign at `-inf`.
    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rat) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Substitution `p(k * x)`.
    pub fn compose_scale(&self, k: &Rat) -> UPoly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &pow;
                pow = &pow * k;
                out
            })
            .collect();
        UPoly::new(coeffs)
    }

    /// Substitution `p(x + c)` (Taylor shift by synthetic division).
    pub fn compose_shift(&self, c: &Rat) -> UPoly {
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &coeffs[j + 1] * c;
                coeffs[j] = &coeffs[j] + add;
            }
        }
        UPoly::new(coeffs)
    }

    /// Reciprocal polynomial `x^deg * p(1/x)`.
    pub fn reverse(&self) -> UPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UPoly::new(coeffs)
    }

    /// Quotient and remainder over the rationals.
    ///
    /// Panics if `div` is zero; callers check.
    pub fn div_rem(&self, div: &UPoly) -> (UPoly, UPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dlead = div.leading().unwrap().clone();
        let ddeg = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return (UPoly::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![Rat::zero(); qlen];
        for qi in (0..qlen).rev() {
            let lead = rem[qi + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / &dlead;
            for (k, dc) in div.coeffs.iter().enumerate() {
                let sub = dc * &q;
                rem[qi + k] = &rem[qi + k] - sub;
            }
            quot[qi] = q;
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Exact division, erroring if the divisor does not divide exactly.
    pub fn exact_div(&self, div: &UPoly) -> Result<UPoly, ExactError> {
        if div.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (q, r) = self.div_rem(div);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::DivisionByZero)
        }
    }

    /// Rational content: the positive rational `c` such that `p / c` has
    /// coprime integer coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Primitive part with a positive leading coefficient: integer, coprime
    /// coefficients. The zero polynomial maps to itself.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        UPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Monic rescale of a nonzero polynomial.
    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::zero(),
            Some(l) => {
                let inv = l.clone();
                UPoly::new(self.coeffs.iter().map(|c| c / &inv).collect())
            }
        }
    }

    /// Monic greatest common divisor via the primitive Euclidean algorithm
    /// (content extraction at every step keeps coefficient growth in check).
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly, ExactError> {
        if self.is_zero() && other.is_zero() {
            return Err(ExactError::GcdBothZero);
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        Ok(a.monic())
    }

    /// Square-free part `p / gcd(p, p')`, normalized to primitive integer
    /// coefficients with a positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<UPoly, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        let q = self.exact_div(&g)?;
        Ok(q.primitive())
    }

    /// Number of leading zero roots: largest `k` with `x^k` dividing `p`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k`.
    pub fn shift_down(&self, k: usize) -> UPoly {
        if k == 0 {
            return self.clone();
        }
        UPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Cauchy bound: every real root lies in `(-M, M)`.
    pub fn cauchy_root_bound(&self) -> Rat {
        let lead = match self.leading() {
            None => return Rat::one(),
            Some(l) => l.clone(),
        };
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = (c / &lead).abs();
            if v > max {
                max = v;
            }
        }
        max + Rat::one()
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let unit = a.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{}", a)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", a)?,
                (_, true) => write!(f, "x^{}", i)?,
                (_, false) => write!(f, "{}*x^{}", a, i)?,
            }
        }
        Ok(())
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UPoly::new(coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UPoly::new(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        UPoly::new(out)
    }
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
    fn mul_examples() {
        // (t-1)(t+1) = t^2 - 1
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        // p * 0 = 0
        assert_eq!(&p(&[3, 2, 1]) * &UPoly::zero(), UPoly::zero());
        // (t-1)(t^2+t+1) = t^3 - 1
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1, 1]), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn degree_adds_under_mul() {
        let a = p(&[1, 2, 3]);
        let b = p(&[4, 5]);
        assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn gcd_examples() {
        // gcd(t^2-1, t^2-2t+1) = t - 1
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // gcd(p, 0) = monic(p)
        let g = p(&[2, 4]).gcd(&UPoly::zero()).unwrap();
        assert_eq!(g, UPoly::new(vec![rat(1, 2), rat(1, 1)]));
        assert_eq!(
            UPoly::zero().gcd(&UPoly::zero()),
            Err(ExactError::GcdBothZero)
        );
    }

    #[test]
    fn paper_cubic_is_squarefree() {
        // gcd with the derivative is 1, so the square-free part is itself.
        let c = p(&[-570, 259, 74, 1]);
        let g = c.gcd(&c.derivative()).unwrap();
        assert_eq!(g, UPoly::one());
        assert_eq!(c.squarefree_part().unwrap(), c);
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 -> t-1
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        // t^2 (t+2) -> t^2 + 2t
        assert_eq!(p(&[0, 0, 2, 1]).squarefree_part().unwrap(), p(&[0, 2, 1]));
        assert_eq!(
            UPoly::zero().squarefree_part(),
            Err(ExactError::ZeroPolynomial)
        );
    }

    #[test]
    fn shift_and_scale() {
        // p(x) = x^2, p(x+1) = x^2 + 2x + 1
        assert_eq!(p(&[0, 0, 1]).compose_shift(&rat(1, 1)), p(&[1, 2, 1]));
        // p(2x) where p = x^2 + x -> 4x^2 + 2x
        assert_eq!(p(&[0, 1, 1]).compose_scale(&rat(2, 1)), p(&[0, 2, 4]));
    }

    #[test]
    fn exact_div_checks_remainder() {
        let a = &p(&[-1, 1]) * &p(&[1, 1, 1]);
        assert_eq!(a.exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1, 1]));
        assert!(p(&[1, 1]).exact_div(&p(&[0, 0, 1])).is_err());
    }

    proptest! {
        /// (p+q)r = pr + qr, exactly.
        #[test]
        fn ring_distributivity(
            a in proptest::collection::vec(-9i64..10, 0..5),
            b in proptest::collection::vec(-9i64..10, 0..5),
            c in proptest::collection::vec(-9i64..10, 0..5),
        ) {
            let (pa, pb, pc) = (p(&a), p(&b), p(&c));
            let lhs = &(&pa + &pb) * &pc;
            let rhs = &(&pa * &pc) + &(&pb * &pc);
            prop_assert_eq!(lhs, rhs);
        }

        /// gcd divides both arguments with zero remainder.
        #[test]
        fn gcd_divides(
            a in proptest::collection::vec(-9i64..10, 1..5),
            b in proptest::collection::vec(-9i64..10, 1..5),
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pa.is_zero() || !pb.is_zero());
            let g = pa.gcd(&pb).unwrap();
            if !pa.is_zero() {
                prop_assert!(pa.div_rem(&g).1.is_zero());
            }
            if !pb.is_zero() {
                prop_assert!(pb.div_rem(&g).1.is_zero());
            }
        }

        /// div_rem reconstructs the dividend.
        #[test]
        fn div_rem_roundtrip(
            a in proptest::collection::vec(-9i64..10, 0..6),
            b in proptest::collection::vec(-9i64..10, 1..4),
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pb.is_zero());
            let (q, r) = pa.div_rem(&pb);
            prop_assert_eq!(&(&q * &pb) + &r, pa);
            prop_assert!(r.is_zero() || r.degree().unwrap() < pb.degree().unwrap());
        }
    }
}
