//! Bivariate elimination workspace: polynomials in an elimination variable
//! `x` whose coefficients are themselves univariate polynomials in a ratio
//! variable `s`, plus the Sylvester resultant that projects a pair of them
//! down to a single polynomial in `s`.

use num_traits::Zero;

use super::rat::Rat;
use super::upoly::UPoly;

/// Polynomial in `x` with `UPoly`-in-`s` coefficients, low-to-high in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoly {
    coeffs: Vec<UPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    /// Leading coefficient in `x`, as a polynomial in `s`.
    pub fn leading_x(&self) -> Option<&UPoly> {
        self.coeffs.last()
    }

    /// Specializes `s := s0`, producing a univariate polynomial in `x`.
    pub fn specialize_s(&self, s0: &Rat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c.eval(s0)).collect())
    }

    /// Exact evaluation at a rational point `(x0, s0)`.
    pub fn eval(&self, x0: &Rat, s0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c.eval(s0);
        }
        acc
    }
}

/// Resultant of `p` and `q` with respect to `x`: the determinant of their
/// Sylvester matrix, a polynomial in `s`. Vanishes exactly at the `s`-values
/// where `p` and `q` share a root in `x` or where both leading coefficients
/// vanish.
pub fn sylvester_resultant(p: &XPoly, q: &XPoly) -> UPoly {
    let (m, n) = match (p.degree_x(), q.degree_x()) {
        (Some(m), Some(n)) => (m, n),
        // Res(p, 0) is zero unless p is a (nonzero) constant in x.
        _ => return UPoly::zero(),
    };
    let size = m + n;
    if size == 0 {
        return UPoly::one();
    }
    let mut mat = vec![vec![UPoly::zero(); size]; size];
    for row in 0..n {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Scalar resultant of two univariate polynomials, via the same Sylvester
/// construction with constant coefficients. Used as the specialization
/// oracle for [`sylvester_resultant`].
pub fn scalar_resultant(p: &UPoly, q: &UPoly) -> Rat {
    let px = XPoly::new(p.coeffs().iter().map(|c| UPoly::constant(c.clone())).collect());
    let qx = XPoly::new(q.coeffs().iter().map(|c| UPoly::constant(c.clone())).collect());
    let det = sylvester_resultant(&px, &qx);
    det.coeff(0)
}

/// Fraction-free Gaussian elimination (Bareiss). All divisions are exact in
/// the polynomial ring, which keeps intermediate degrees and coefficient
/// sizes bounded by the final determinant's.
fn bareiss_determinant(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut sign = 1i32;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return UPoly::zero(),
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let mik = m[i][k].clone();
            for j in k + 1..n {
                let num = &(&m[i][j] * &pivot) - &(&mik * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = UPoly::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        &UPoly::zero() - &det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_i64};
    use proptest::prelude::*;

    fn upoly(c: &[i64]) -> UPoly {
        UPoly::from_i64(c)
    }

    /// x - s
    fn x_minus_s() -> XPoly {
        XPoly::new(vec![upoly(&[0, -1]), upoly(&[1])])
    }

    #[test]
    fn resultant_linear_pair() {
        // p = x - s, q = x + s -> det [[1, -s], [1, s]] = 2s
        let q = XPoly::new(vec![upoly(&[0, 1]), upoly(&[1])]);
        assert_eq!(sylvester_resultant(&x_minus_s(), &q), upoly(&[0, 2]));
    }

    #[test]
    fn resultant_of_identical_is_zero() {
        assert_eq!(
            sylvester_resultant(&x_minus_s(), &x_minus_s()),
            UPoly::zero()
        );
    }

    #[test]
    fn resultant_shared_root_is_zero() {
        // q = x^2 - s^2 shares the root x = s with p = x - s.
        let q = XPoly::new(vec![upoly(&[0, 0, -1]), upoly(&[]), upoly(&[1])]);
        assert_eq!(sylvester_resultant(&x_minus_s(), &q), UPoly::zero());
    }

    #[test]
    fn scalar_resultant_matches_known_value() {
        // Res(x^2 - 1, x - 2) = (2^2 - 1) = 3 up to sign convention:
        // Res(p, q) = lc(p)^deg q * prod q over roots of p ... easiest check:
        // Res(x - a, x - b) = b - a with this row ordering.
        let p = upoly(&[-3, 1]);
        let q = upoly(&[-5, 1]);
        assert_eq!(scalar_resultant(&p, &q), rat_i64(-3) - rat_i64(-5));
    }

    proptest! {
        /// Specialization identity: evaluating the resultant at s0 equals the
        /// scalar resultant of the specialized polynomials whenever neither
        /// leading coefficient vanishes at s0.
        #[test]
        fn specialization_identity(
            pc in proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..3), 1..4),
            qc in proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..3), 1..4),
            s0n in -6i64..7,
        ) {
            let p = XPoly::new(pc.iter().map(|c| upoly(c)).collect());
            let q = XPoly::new(qc.iter().map(|c| upoly(c)).collect());
            prop_assume!(!p.is_zero() && !q.is_zero());
            let s0 = rat(s0n, 1);
            let lp = p.leading_x().unwrap().eval(&s0);
            let lq = q.leading_x().unwrap().eval(&s0);
            prop_assume!(!lp.is_zero() && !lq.is_zero());
            let lhs = sylvester_resultant(&p, &q).eval(&s0);
            let rhs = scalar_resultant(&p.specialize_s(&s0), &q.specialize_s(&s0));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
