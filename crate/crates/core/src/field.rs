//! GF(p^k) construction for small prime powers.
//!
//! Elements are polynomials over GF(p) of degree < k, indexed by base-p
//! digits with the constant term least significant, so index 0 is zero and
//! index 1 is one and no relabeling is ever needed. For k > 1 multiplication
//! reduces modulo a monic irreducible polynomial of degree k, either supplied
//! by the caller or found by exhaustive search.

use thiserror::Error;

use crate::ring::{FiniteRing, RingError};

/// Default desk-scale bound on the field order p^k.
pub const DEFAULT_MAX_ORDER: usize = 16;

/// Description of a finite field GF(p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u16,
    pub k: u32,
    /// Monic reduction polynomial, ascending coefficients of length k+1.
    /// Ignored for k = 1; `None` selects the default for k > 1: the first
    /// irreducible candidate when non-leading coefficients are ordered with
    /// the highest-degree coefficient most significant (GF(4): x^2+x+1,
    /// GF(8): x^3+x+1, GF(16): x^4+x+1).
    pub reduction_polynomial: Option<Vec<u16>>,
    /// Bound on p^k; [`DEFAULT_MAX_ORDER`] unless overridden.
    pub max_order: usize,
}

impl FieldSpec {
    pub fn new(p: u16, k: u32) -> Self {
        FieldSpec {
            p,
            k,
            reduction_polynomial: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    pub fn with_polynomial(mut self, poly: Vec<u16>) -> Self {
        self.reduction_polynomial = Some(poly);
        self
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u16),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("polynomial {polynomial:?} is reducible over GF({p}): divisible by {factor:?}")]
    NotIrreducible {
        p: u16,
        polynomial: Vec<u16>,
        factor: Vec<u16>,
    },
    #[error("bad reduction polynomial: {0}")]
    BadPolynomial(String),
    #[error("field order {order} exceeds the configured bound {bound}")]
    OrderBound { order: u128, bound: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^k) as a validated [`FiniteRing`] whose nonzero elements are
/// all invertible.
pub fn build_field(spec: &FieldSpec) -> Result<FiniteRing, FieldError> {
    if !is_prime(spec.p as u64) {
        return Err(FieldError::NotPrime(spec.p));
    }
    if spec.k == 0 {
        return Err(FieldError::BadDegree(0));
    }
    let order = spec.order();
    if order > spec.max_order as u128 {
        return Err(FieldError::OrderBound {
            order,
            bound: spec.max_order,
        });
    }
    let q = order as usize;
    let p = spec.p;
    let k = spec.k as usize;

    let poly: Option<Vec<u16>> = if k == 1 {
        None
    } else {
        let f = match &spec.reduction_polynomial {
            Some(f) => {
                check_polynomial_shape(p, k, f)?;
                f.clone()
            }
            None => default_irreducible(p, k),
        };
        if let Err(factor) = irreducible(p, &f) {
            return Err(FieldError::NotIrreducible {
                p,
                polynomial: f,
                factor,
            });
        }
        Some(f)
    };

    let digits = |m: usize| -> Vec<u16> {
        let mut c = vec![0u16; k];
        let mut t = m;
        for coeff in c.iter_mut() {
            *coeff = (t % p as usize) as u16;
            t /= p as usize;
        }
        c
    };
    let index_of = |c: &[u16]| -> u16 {
        let mut m = 0usize;
        for &coeff in c.iter().rev() {
            m = m * p as usize + coeff as usize;
        }
        m as u16
    };

    let mut add_rows = vec![vec![0u16; q]; q];
    let mut mul_rows = vec![vec![0u16; q]; q];
    for a in 0..q {
        let ca = digits(a);
        for b in 0..q {
            let cb = digits(b);
            let sum: Vec<u16> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
            add_rows[a][b] = index_of(&sum);
            let prod = match &poly {
                None => vec![((a as u32 * b as u32) % p as u32) as u16],
                Some(f) => {
                    let mut conv = vec![0u16; 2 * k - 1];
                    for (i, &x) in ca.iter().enumerate() {
                        for (j, &y) in cb.iter().enumerate() {
                            conv[i + j] =
                                ((conv[i + j] as u32 + x as u32 * y as u32) % p as u32) as u16;
                        }
                    }
                    poly_rem(p, conv, f)
                }
            };
            let mut padded = prod;
            padded.resize(k, 0);
            mul_rows[a][b] = index_of(&padded);
        }
    }

    let (ring, perm) = FiniteRing::from_tables(&add_rows, &mul_rows)?;
    debug_assert!(
        perm.iter().enumerate().all(|(i, &v)| i == v as usize),
        "field labeling is canonical by construction"
    );
    debug_assert!(ring.elements().skip(1).all(|x| ring.is_unit(x)));
    Ok(ring)
}

fn check_polynomial_shape(p: u16, k: usize, f: &[u16]) -> Result<(), FieldError> {
    if f.len() != k + 1 {
        return Err(FieldError::BadPolynomial(format!(
            "expected degree {k} (length {}), got length {}",
            k + 1,
            f.len()
        )));
    }
    if f[k] != 1 {
        return Err(FieldError::BadPolynomial(
            "polynomial must be monic".to_string(),
        ));
    }
    if f.iter().any(|&c| c >= p) {
        return Err(FieldError::BadPolynomial(format!(
            "coefficients must lie in [0, {p})"
        )));
    }
    Ok(())
}

/// First irreducible monic polynomial of degree k, scanning non-leading
/// coefficient vectors with the highest-degree coefficient most significant.
fn default_irreducible(p: u16, k: usize) -> Vec<u16> {
    let total = (p as usize).pow(k as u32);
    for m in 0..total {
        let mut f = vec![0u16; k + 1];
        let mut t = m;
        for coeff in f.iter_mut().take(k) {
            *coeff = (t % p as usize) as u16;
            t /= p as usize;
        }
        f[k] = 1;
        if irreducible(p, &f).is_ok() {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Exhaustive factor scan: divides f by every monic polynomial of degree
/// 1..=deg(f)/2. Returns the first factor found.
fn irreducible(p: u16, f: &[u16]) -> Result<(), Vec<u16>> {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for m in 0..count {
            let mut g = vec![0u16; d + 1];
            let mut t = m;
            for coeff in g.iter_mut().take(d) {
                *coeff = (t % p as usize) as u16;
                t /= p as usize;
            }
            g[d] = 1;
            if poly_rem(p, f.to_vec(), &g).is_empty() {
                return Err(g);
            }
        }
    }
    Ok(())
}

/// Remainder of a modulo the monic polynomial g, over GF(p). Returns the
/// coefficient vector with trailing zeros trimmed (empty = zero).
fn poly_rem(p: u16, mut a: Vec<u16>, g: &[u16]) -> Vec<u16> {
    while let Some(&lead) = a.last() {
        if lead == 0 {
            a.pop();
            continue;
        }
        if a.len() < g.len() {
            break;
        }
        let shift = a.len() - g.len();
        for (i, &gc) in g.iter().enumerate() {
            let cur = a[shift + i] as u32;
            let sub = (lead as u32 * gc as u32) % p as u32;
            a[shift + i] = ((cur + p as u32 - sub) % p as u32) as u16;
        }
        debug_assert_eq!(*a.last().unwrap(), 0);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_xor_and_and() {
        let f = build_field(&FieldSpec::new(2, 1)).unwrap();
        assert_eq!(f.add_table(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(f.mul_table(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn gf3_has_two_units() {
        let f = build_field(&FieldSpec::new(3, 1)).unwrap();
        assert_eq!(f.order(), 3);
        assert_eq!(f.units().len(), 2);
    }

    #[test]
    fn gf4_every_nonzero_element_invertible() {
        let f = build_field(&FieldSpec::new(2, 2).with_polynomial(vec![1, 1, 1])).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.units().len(), 3);
        for x in f.elements().skip(1) {
            assert!(
                f.elements().any(|y| f.mul(x, y) == f.one()),
                "{x} lacks an inverse"
            );
        }
        // Default polynomial agrees with the explicit x^2+x+1.
        let default = build_field(&FieldSpec::new(2, 2)).unwrap();
        assert_eq!(default, f);
    }

    #[test]
    fn gf8_and_gf9_defaults() {
        let f8 = build_field(&FieldSpec::new(2, 3)).unwrap();
        assert_eq!(f8.order(), 8);
        assert_eq!(f8.units().len(), 7);
        let f9 = build_field(&FieldSpec::new(3, 2)).unwrap();
        assert_eq!(f9.order(), 9);
        assert_eq!(f9.units().len(), 8);
    }

    #[test]
    fn reducible_polynomial_is_rejected_with_factor() {
        // x^2 + 1 = (x+1)^2 over GF(2).
        let err = build_field(&FieldSpec::new(2, 2).with_polynomial(vec![1, 0, 1])).unwrap_err();
        match err {
            FieldError::NotIrreducible { factor, .. } => assert_eq!(factor, vec![1, 1]),
            other => panic!("expected NotIrreducible, got {other:?}"),
        }
    }

    #[test]
    fn non_prime_characteristic_is_rejected() {
        assert_eq!(
            build_field(&FieldSpec::new(6, 1)).unwrap_err(),
            FieldError::NotPrime(6)
        );
    }

    #[test]
    fn order_bound_is_enforced_but_configurable() {
        assert!(matches!(
            build_field(&FieldSpec::new(5, 2)).unwrap_err(),
            FieldError::OrderBound { order: 25, .. }
        ));
        let f25 = build_field(&FieldSpec::new(5, 2).with_max_order(25)).unwrap();
        assert_eq!(f25.order(), 25);
        assert_eq!(f25.units().len(), 24);
    }
}
