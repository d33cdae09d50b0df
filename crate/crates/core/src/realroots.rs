//! Certified real-root isolation and refinement.
//!
//! All decisions are made in exact rational arithmetic: Sturm counts drive a
//! bisection over the Cauchy root bound, and every interval returned either
//! brackets a sign change or pins an exact rational root. Floating values
//! appear only when a caller asks for a reported midpoint.

use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{rat, rat_to_f64, Rat, UPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("polynomial must be square-free for a Sturm chain")]
    NonSquareFree,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}

/// Isolating interval for one real root of a square-free polynomial.
///
/// Either `lo < hi` with a strict sign change at the endpoints, or
/// `lo == hi` and the root is exactly rational.
#[derive(Clone, Debug)]
pub struct RootInterval {
    lo: Rat,
    hi: Rat,
    poly: Arc<UPoly>,
    sign_lo: i32,
    sign_hi: i32,
}

impl RootInterval {
    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn poly(&self) -> &UPoly {
        &self.poly
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }

    /// Exact rational root value when the interval has collapsed.
    pub fn exact_value(&self) -> Option<&Rat> {
        if self.is_exact() {
            Some(&self.lo)
        } else {
            None
        }
    }

    fn bracket_holds(&self) -> bool {
        if self.is_exact() {
            self.poly.eval(&self.lo).is_zero()
        } else {
            self.sign_lo * self.sign_hi < 0
                && sign(&self.poly.eval(&self.lo)) == self.sign_lo
                && sign(&self.poly.eval(&self.hi)) == self.sign_hi
        }
    }
}

fn sign(v: &Rat) -> i32 {
    use num_traits::Signed;
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Canonical Sturm chain of a square-free polynomial.
///
/// Remainders are normalized by their (positive) content only, which
/// preserves signs and keeps coefficients primitive.
pub fn sturm_sequence(p: &UPoly) -> Result<Vec<UPoly>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let dp = p.derivative();
    if !dp.is_zero() {
        let g = p.gcd(&dp).expect("inputs not both zero");
        if g.degree() != Some(0) {
            return Err(RootError::NonSquareFree);
        }
    }
    let mut chain = vec![normalize_content(p), normalize_content(&dp)];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        let neg = &UPoly::zero() - &r;
        chain.push(normalize_content(&neg));
    }
    chain.pop(); // drop the trailing zero
    Ok(chain)
}

fn normalize_content(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return UPoly::zero();
    }
    let c = p.content();
    p.scale(&(Rat::from_integer(1.into()) / c))
}

fn variations_at(chain: &[UPoly], x: &Rat) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| sign(&p.eval(x))).collect();
    count_variations(&signs)
}

fn variations_at_neg_inf(chain: &[UPoly]) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.sign_at_neg_inf()).collect();
    count_variations(&signs)
}

fn variations_at_pos_inf(chain: &[UPoly]) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.sign_at_pos_inf()).collect();
    count_variations(&signs)
}

fn count_variations(signs: &[i32]) -> usize {
    let mut last = 0i32;
    let mut count = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots over the whole line.
pub fn count_real_roots(p: &UPoly) -> Result<usize, RootError> {
    let chain = sturm_sequence(p)?;
    Ok(variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain))
}

/// Pairwise-disjoint isolating intervals for all real roots of `p`
/// (square-free part taken internally), sorted ascending.
pub fn isolate_real_roots(p: &UPoly) -> Result<Vec<RootInterval>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let sf = Arc::new(p.squarefree_part().expect("nonzero"));
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_sequence(&sf)?;
    let bound = sf.cauchy_root_bound();
    let lo = -&bound;
    let hi = bound;

    // Roots are counted on half-open intervals (a, b]; the Cauchy bound is
    // strict, so neither endpoint is a root.
    let mut out = Vec::new();
    let total = variations_at(&chain, &lo) - variations_at(&chain, &hi);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => {
                let fa = sf.eval(&a);
                let fb = sf.eval(&b);
                if fb.is_zero() {
                    out.push(RootInterval {
                        lo: b.clone(),
                        hi: b,
                        poly: sf.clone(),
                        sign_lo: 0,
                        sign_hi: 0,
                    });
                } else {
                    debug_assert!(sign(&fa) * sign(&fb) < 0);
                    out.push(RootInterval {
                        sign_lo: sign(&fa),
                        sign_hi: sign(&fb),
                        lo: a,
                        hi: b,
                        poly: sf.clone(),
                    });
                }
            }
            _ => {
                let mid = (&a + &b) / rat(2, 1);
                if sf.eval(&mid).is_zero() {
                    out.push(RootInterval {
                        lo: mid.clone(),
                        hi: mid.clone(),
                        poly: sf.clone(),
                        sign_lo: 0,
                        sign_hi: 0,
                    });
                    // Exclude a margin around the exact root, shrinking it
                    // until it contains no other root.
                    let mut delta = (&b - &a) / rat(4, 1);
                    loop {
                        let (ml, mr) = (&mid - &delta, &mid + &delta);
                        let inside = variations_at(&chain, &ml) - variations_at(&chain, &mr);
                        if inside == 1 && !sf.eval(&ml).is_zero() && !sf.eval(&mr).is_zero() {
                            let left = variations_at(&chain, &a) - variations_at(&chain, &ml);
                            let right = variations_at(&chain, &mr) - variations_at(&chain, &b);
                            stack.push((a, ml, left));
                            stack.push((mr, b, right));
                            break;
                        }
                        delta = delta / rat(2, 1);
                    }
                } else {
                    let left = variations_at(&chain, &a) - variations_at(&chain, &mid);
                    stack.push((a, mid.clone(), left));
                    stack.push((mid, b, count - left));
                }
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Bisection refinement down to width `eps`, preserving the bracketing
/// invariant at every step; collapses to an exact interval when a midpoint
/// lands on the root.
pub fn refine(r: &RootInterval, eps: &Rat) -> RootInterval {
    let mut cur = r.clone();
    debug_assert!(cur.bracket_holds());
    while !cur.is_exact() && cur.width() > *eps {
        let mid = cur.midpoint();
        let fm = cur.poly.eval(&mid);
        let sm = sign(&fm);
        if sm == 0 {
            return RootInterval {
                lo: mid.clone(),
                hi: mid,
                poly: cur.poly.clone(),
                sign_lo: 0,
                sign_hi: 0,
            };
        }
        if sm == cur.sign_lo {
            cur.lo = mid;
        } else {
            cur.hi = mid;
        }
    }
    cur
}

/// Refinement convenience: isolate and refine every real root to `eps`.
pub fn refined_real_roots(p: &UPoly, eps: &Rat) -> Result<Vec<RootInterval>, RootError> {
    Ok(isolate_real_roots(p)?
        .iter()
        .map(|r| refine(r, eps))
        .collect())
}
