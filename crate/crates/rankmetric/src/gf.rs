//! Exact arithmetic in GF(q) and the extension field GF(q^m).
//!
//! `q` is a prime; GF(q^m) is represented as GF(q)[x] modulo a monic
//! irreducible polynomial of degree `m`, with elements stored as dense
//! coefficient vectors with respect to the polynomial basis
//! `1, x, ..., x^{m-1}`. The modulus is chosen deterministically as the
//! lexicographically smallest monic irreducible of degree `m`
//! (coefficients compared from the constant term upward), so independent
//! runs agree on every element encoding.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Scalar arithmetic mod q
// ---------------------------------------------------------------------------

#[inline]
pub(crate) fn sadd(q: u64, a: u64, b: u64) -> u64 {
    (a + b) % q
}

#[inline]
pub(crate) fn ssub(q: u64, a: u64, b: u64) -> u64 {
    (a + q - b) % q
}

#[inline]
pub(crate) fn smul(q: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

/// Inverse mod a prime q; panics on zero input (callers check).
pub(crate) fn sinv(q: u64, a: u64) -> u64 {
    assert!(a % q != 0, "inverse of zero mod {q}");
    // Fermat: a^{q-2} mod q.
    let mut base = a % q;
    let mut exp = q - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = smul(q, acc, base);
        }
        base = smul(q, base, base);
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// Dense polynomials over GF(q), little-endian coefficient order
// ---------------------------------------------------------------------------

fn poly_deg(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

fn poly_mul(q: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = sadd(q, out[i + j], smul(q, ai, bj));
        }
    }
    out
}

/// Remainder of `a` modulo `b` (b nonzero). Both little-endian.
fn poly_rem(q: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut r: Vec<u64> = a.to_vec();
    let lead_inv = sinv(q, b[db]);
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let coef = smul(q, r[dr], lead_inv);
        let shift = dr - db;
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            r[j + shift] = ssub(q, r[j + shift], smul(q, coef, bj));
        }
    }
    r.truncate(db);
    r.resize(db, 0);
    r
}

/// Extended Euclid on polynomials: returns (g, s) with s*a = g mod b and g
/// the monic gcd. Used for inversion mod the field polynomial.
fn poly_ext_gcd(q: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r0: Vec<u64> = b.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while poly_deg(&r1).is_some() {
        // r0 = qt * r1 + r2
        let d1 = poly_deg(&r1).unwrap();
        let lead_inv = sinv(q, r1[d1]);
        let mut rem = r0.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(d1) + 1];
        while let Some(dr) = poly_deg(&rem) {
            if dr < d1 {
                break;
            }
            let coef = smul(q, rem[dr], lead_inv);
            let shift = dr - d1;
            quot[shift] = sadd(q, quot[shift], coef);
            for (j, &bj) in r1.iter().enumerate().take(d1 + 1) {
                rem[j + shift] = ssub(q, rem[j + shift], smul(q, coef, bj));
            }
        }
        let s2 = {
            // s2 = s0 - quot * s1
            let qs = poly_mul(q, &quot, &s1);
            let n = qs.len().max(s0.len());
            let mut out = vec![0u64; n];
            for (i, o) in out.iter_mut().enumerate() {
                let x = s0.get(i).copied().unwrap_or(0);
                let y = qs.get(i).copied().unwrap_or(0);
                *o = ssub(q, x, y);
            }
            out
        };
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // Normalize gcd to monic.
    if let Some(d) = poly_deg(&r0) {
        let inv = sinv(q, r0[d]);
        for c in r0.iter_mut() {
            *c = smul(q, *c, inv);
        }
        for c in s0.iter_mut() {
            *c = smul(q, *c, inv);
        }
    }
    (r0, s0)
}

/// Trial division over all monic polynomials of degree <= deg(f)/2.
fn poly_is_irreducible(q: u64, f: &[u64]) -> bool {
    let m = match poly_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=m / 2 {
        // All monic polynomials of degree d, indexed by their low coefficients.
        let count = (q as u128).pow(d as u32);
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        for idx in 0..count {
            let mut v = idx;
            for c in g.iter_mut().take(d) {
                *c = (v % q as u128) as u64;
                v /= q as u128;
            }
            if poly_deg(&poly_rem(q, f, &g)).is_none() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(q),
/// comparing coefficient tuples (c_0, ..., c_{m-1}) from the constant term.
fn smallest_irreducible(q: u64, m: usize) -> Vec<u64> {
    let total = (q as u128)
        .checked_pow(m as u32)
        .expect("modulus search space overflows u128");
    for rank in 0..total {
        // c_0 is the most significant digit so that the scan is lexicographic.
        let mut f = vec![0u64; m + 1];
        f[m] = 1;
        let mut v = rank;
        for i in (0..m).rev() {
            f[i] = (v % q as u128) as u64;
            v /= q as u128;
        }
        if poly_is_irreducible(q, &f) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} exists over GF({q})");
}

// ---------------------------------------------------------------------------
// Field context
// ---------------------------------------------------------------------------

/// Arithmetic context for GF(q^m): prime modulus, extension degree, and the
/// monic irreducible reduction polynomial. Immutable and safe to share
/// across threads.
#[derive(Debug)]
pub struct FieldContext {
    q: u64,
    m: usize,
    /// Length m+1, little-endian, monic.
    modulus: Vec<u64>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    /// GF(q^m) with the deterministically chosen reduction polynomial.
    pub fn new(q: u64, m: usize) -> Result<Arc<Self>> {
        if !is_prime(q) {
            return Err(Error::Domain(format!("q = {q} is not prime")));
        }
        if m == 0 {
            return Err(Error::Domain("extension degree m must be >= 1".into()));
        }
        if (q as u128).checked_pow(m as u32).is_none() {
            return Err(Error::Domain(format!("q^m overflows for q={q}, m={m}")));
        }
        let modulus = smallest_irreducible(q, m);
        Ok(Arc::new(FieldContext { q, m, modulus }))
    }

    /// GF(q^m) with an explicit monic irreducible modulus (length m+1,
    /// little-endian coefficients).
    pub fn with_modulus(q: u64, m: usize, modulus: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(q) {
            return Err(Error::Domain(format!("q = {q} is not prime")));
        }
        if m == 0 || modulus.len() != m + 1 {
            return Err(Error::Domain(format!(
                "modulus must have exactly {} coefficients",
                m + 1
            )));
        }
        if modulus.iter().any(|&c| c >= q) {
            return Err(Error::Domain("modulus coefficients must lie in [0, q)".into()));
        }
        if modulus[m] != 1 {
            return Err(Error::Domain("modulus must be monic".into()));
        }
        if !poly_is_irreducible(q, &modulus) {
            return Err(Error::Domain("modulus is not irreducible".into()));
        }
        Ok(Arc::new(FieldContext { q, m, modulus }))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// q^m as an exact integer.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.q).pow(self.m as u32)
    }

    /// q^m when it fits machine-sized enumeration.
    pub fn order_u128(&self) -> u128 {
        (self.q as u128).pow(self.m as u32)
    }

    /// Element from coefficients with respect to the basis 1, x, ..., x^{m-1}.
    pub fn element(self: &Arc<Self>, coeffs: Vec<u64>) -> Result<ExtFieldElement> {
        if coeffs.len() != self.m {
            return Err(Error::LengthMismatch {
                left: coeffs.len(),
                right: self.m,
            });
        }
        if coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::Domain("coefficients must lie in [0, q)".into()));
        }
        Ok(ExtFieldElement {
            ctx: Arc::clone(self),
            coeffs,
        })
    }

    pub fn zero(self: &Arc<Self>) -> ExtFieldElement {
        ExtFieldElement {
            ctx: Arc::clone(self),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(self: &Arc<Self>) -> ExtFieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = 1;
        ExtFieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    /// Basis element x^i (0 <= i < m).
    pub fn alpha(self: &Arc<Self>, i: usize) -> ExtFieldElement {
        assert!(i < self.m, "basis index {i} out of range for m = {}", self.m);
        let mut coeffs = vec![0; self.m];
        coeffs[i] = 1;
        ExtFieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    /// Element whose base-q digits are the coefficients (digit i = coeff of x^i).
    pub fn from_index(self: &Arc<Self>, index: u128) -> ExtFieldElement {
        debug_assert!(index < self.order_u128());
        let mut coeffs = vec![0u64; self.m];
        let mut v = index;
        for c in coeffs.iter_mut() {
            *c = (v % self.q as u128) as u64;
            v /= self.q as u128;
        }
        ExtFieldElement {
            ctx: Arc::clone(self),
            coeffs,
        }
    }

    /// All q^m elements in index order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = ExtFieldElement> + '_ {
        let ctx = Arc::clone(self);
        (0..self.order_u128()).map(move |i| ctx.from_index(i))
    }

    pub(crate) fn add_slices(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sadd(self.q, x, y))
            .collect()
    }

    pub(crate) fn sub_slices(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ssub(self.q, x, y))
            .collect()
    }

    pub(crate) fn mul_slices(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let prod = poly_mul(self.q, a, b);
        let mut r = poly_rem(self.q, &prod, &self.modulus);
        r.resize(self.m, 0);
        r
    }

    pub(crate) fn inv_slice(&self, a: &[u64]) -> Option<Vec<u64>> {
        poly_deg(a)?;
        let (g, s) = poly_ext_gcd(self.q, a, &self.modulus);
        debug_assert_eq!(poly_deg(&g), Some(0), "modulus is irreducible");
        let mut r = poly_rem(self.q, &s, &self.modulus);
        r.resize(self.m, 0);
        Some(r)
    }
}

// ---------------------------------------------------------------------------
// Extension field elements
// ---------------------------------------------------------------------------

/// An element of GF(q^m), stored as its coefficient vector with respect to
/// the polynomial basis of its [`FieldContext`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtFieldElement {
    ctx: Arc<FieldContext>,
    coeffs: Vec<u64>,
}

impl ExtFieldElement {
    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(ExtFieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.ctx.add_slices(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(ExtFieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.ctx.sub_slices(&self.coeffs, &other.coeffs),
        })
    }

    pub fn neg(&self) -> Self {
        let q = self.ctx.q();
        ExtFieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.coeffs.iter().map(|&c| ssub(q, 0, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(ExtFieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.ctx.mul_slices(&self.coeffs, &other.coeffs),
        })
    }

    /// Multiply by a GF(q) scalar.
    pub fn scalar_mul(&self, s: u64) -> Self {
        let q = self.ctx.q();
        let s = s % q;
        ExtFieldElement {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.coeffs.iter().map(|&c| smul(q, c, s)).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self.ctx.inv_slice(&self.coeffs) {
            Some(coeffs) => Ok(ExtFieldElement {
                ctx: Arc::clone(&self.ctx),
                coeffs,
            }),
            None => Err(Error::DivisionByZero),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc.coeffs = self.ctx.mul_slices(&acc.coeffs, &base.coeffs);
            }
            base.coeffs = self.ctx.mul_slices(&base.coeffs, &base.coeffs);
            exp >>= 1;
        }
        acc
    }

    /// a^{q^i}. Iterates the q-power map; i is reduced mod m since the map
    /// has order m on GF(q^m).
    pub fn frobenius(&self, i: usize) -> Self {
        let rounds = i % self.ctx.m();
        let mut out = self.clone();
        for _ in 0..rounds {
            out = out.pow(self.ctx.q());
        }
        out
    }

    /// Coordinates with respect to the polynomial basis, as a length-m
    /// column over GF(q). A GF(q)-linear bijection by construction.
    pub fn expand(&self) -> Vec<u64> {
        self.coeffs.clone()
    }

    /// Position of this element in base-q digit order.
    pub fn index(&self) -> u128 {
        let q = self.ctx.q() as u128;
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * q + c as u128)
    }
}

impl fmt::Display for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Arc<FieldContext> {
        FieldContext::new(2, 2).unwrap()
    }

    #[test]
    fn smallest_modulus_is_deterministic() {
        // GF(4): x^2 + x + 1 is the only irreducible quadratic over GF(2).
        assert_eq!(gf4().modulus(), &[1, 1, 1]);
        // GF(8): lexicographic scan from the constant term picks x^3 + x^2 + 1
        // (constant coefficient tuple (1,0,1) precedes (1,1,0)).
        let gf8 = FieldContext::new(2, 3).unwrap();
        assert_eq!(gf8.modulus(), &[1, 0, 1, 1]);
        // Degree 1: reduction by x, i.e. GF(q) itself.
        let gf3 = FieldContext::new(3, 1).unwrap();
        assert_eq!(gf3.modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldContext::new(4, 2), Err(Error::Domain(_))));
        assert!(matches!(FieldContext::new(2, 0), Err(Error::Domain(_))));
        // x^2 + 1 = (x+1)^2 over GF(2).
        assert!(FieldContext::with_modulus(2, 2, vec![1, 0, 1]).is_err());
        assert!(FieldContext::with_modulus(2, 2, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn gf4_multiplication_table() {
        // In GF(4) with modulus x^2 + x + 1: x * x = x + 1.
        let ctx = gf4();
        let x = ctx.alpha(1);
        let expected = ctx.element(vec![1, 1]).unwrap();
        assert_eq!(x.mul(&x).unwrap(), expected);
        // inv(x) = x + 1 since x(x+1) = x^2 + x = 1.
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), ctx.one());
    }

    #[test]
    fn gf4_frobenius() {
        let ctx = gf4();
        let x = ctx.alpha(1);
        assert_eq!(x.frobenius(0), x);
        assert_eq!(x.frobenius(1), ctx.element(vec![1, 1]).unwrap());
        assert_eq!(ctx.zero().frobenius(3), ctx.zero());
    }

    #[test]
    fn gf3_scalar_arithmetic() {
        let ctx = FieldContext::new(3, 1).unwrap();
        let two = ctx.element(vec![2]).unwrap();
        assert_eq!(two.add(&two).unwrap(), ctx.one());
    }

    #[test]
    fn characteristic_two_self_cancels() {
        let ctx = gf4();
        for a in ctx.elements() {
            assert!(a.add(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn additive_identity_and_absorbing_zero() {
        let ctx = FieldContext::new(3, 2).unwrap();
        let zero = ctx.zero();
        let one = ctx.one();
        for a in ctx.elements() {
            assert_eq!(a.add(&zero).unwrap(), a);
            assert!(a.mul(&zero).unwrap().is_zero());
            assert_eq!(a.mul(&one).unwrap(), a);
        }
    }

    #[test]
    fn inverses_exhaustive_gf8() {
        let ctx = FieldContext::new(2, 3).unwrap();
        for a in ctx.elements() {
            if a.is_zero() {
                assert_eq!(a.inv(), Err(Error::DivisionByZero));
            } else {
                assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), ctx.one());
            }
        }
    }

    /// Field axioms on every pair/triple of GF(q^m) with q^m <= 64.
    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (q, m) in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)] {
            if (q as u64).pow(m) > 64 {
                continue;
            }
            let ctx = FieldContext::new(q, m as usize).unwrap();
            let elems: Vec<_> = ctx.elements().collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &elems {
                        let ab_c = a.add(b).unwrap().add(c).unwrap();
                        let a_bc = a.add(&b.add(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let mul_assoc_l = a.mul(b).unwrap().mul(c).unwrap();
                        let mul_assoc_r = a.mul(&b.mul(c).unwrap()).unwrap();
                        assert_eq!(mul_assoc_l, mul_assoc_r);
                        let distr_l = a.mul(&b.add(c).unwrap()).unwrap();
                        let distr_r = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(distr_l, distr_r);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_linear_and_fixes_base_field() {
        for (q, m) in [(2u64, 3usize), (3, 2)] {
            let ctx = FieldContext::new(q, m).unwrap();
            let elems: Vec<_> = ctx.elements().collect();
            for a in &elems {
                for b in &elems {
                    let lhs = a.add(b).unwrap().frobenius(1);
                    let rhs = a.frobenius(1).add(&b.frobenius(1)).unwrap();
                    assert_eq!(lhs.expand(), rhs.expand());
                }
            }
            let fixed = elems.iter().filter(|a| a.frobenius(1) == **a).count();
            assert_eq!(fixed as u64, q, "Frobenius fixes exactly the base subfield");
        }
    }

    #[test]
    fn expand_is_a_bijection() {
        for (q, m) in [(2u64, 6usize), (3, 3), (7, 2)] {
            let ctx = FieldContext::new(q, m).unwrap();
            let mut seen = std::collections::HashSet::new();
            for a in ctx.elements() {
                assert!(seen.insert(a.expand()), "duplicate expansion");
            }
            assert_eq!(seen.len() as u128, ctx.order_u128());
        }
    }

    #[test]
    fn expand_of_basis_element_is_unit_column() {
        let ctx = FieldContext::new(3, 2).unwrap();
        assert_eq!(ctx.alpha(1).expand(), vec![0, 1]);
        assert_eq!(ctx.zero().expand(), vec![0, 0]);
    }

    #[test]
    fn expand_linearity_gf9() {
        let ctx = FieldContext::new(3, 2).unwrap();
        let elems: Vec<_> = ctx.elements().collect();
        for a in &elems {
            for b in &elems {
                let sum = a.add(b).unwrap();
                let want: Vec<u64> = a
                    .expand()
                    .iter()
                    .zip(b.expand())
                    .map(|(&x, y)| (x + y) % 3)
                    .collect();
                assert_eq!(sum.expand(), want);
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let ctx = FieldContext::new(5, 2).unwrap();
        for i in 0..ctx.order_u128() {
            assert_eq!(ctx.from_index(i).index(), i);
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = FieldContext::new(2, 2).unwrap().one();
        let b = FieldContext::new(2, 3).unwrap().one();
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch));
    }
}
