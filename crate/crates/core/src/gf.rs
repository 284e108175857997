//! Arithmetic in prime-power fields GF(p^m).
//!
//! An element is stored as its index in `[0, p^m)`: the coefficient vector of
//! its polynomial representative written base `p`, constant term least
//! significant. The same index is the serialized form, so indices are stable
//! across runs as long as the modulus is, and the modulus is always the
//! smallest monic irreducible polynomial of degree `m` (ordered by the index
//! of its lower `m` coefficients).
//!
//! Fields with at most 2^20 elements get exp/log tables; larger fields fall
//! back to polynomial multiplication and stay exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith;
use crate::error::FieldError;

pub const DEFAULT_SIZE_CEILING: u64 = 1 << 32;
pub const LOG_TABLE_LIMIT: u64 = 1 << 20;

static NEXT_CONTEXT_ID: AtomicU32 = AtomicU32::new(1);

/// An element of some [`FieldContext`]. Only meaningful together with the
/// context that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    ctx: u32,
    repr: u32,
}

impl FieldElement {
    pub fn index(self) -> u64 {
        self.repr as u64
    }

    pub fn context_id(self) -> u32 {
        self.ctx
    }

    pub fn is_zero(self) -> bool {
        self.repr == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.repr)
    }
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldContext {
    id: u32,
    p: u64,
    m: u32,
    size: u64,
    modulus: Vec<u64>,
    modulus_bits: u64,
    tables: Option<LogTables>,
    generator: u32,
    group_factors: Vec<u64>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

type FieldCache = Mutex<HashMap<(u64, u32), Arc<FieldContext>>>;

/// GF(p^m) with the default size ceiling. Contexts are immutable, so one
/// instance per `(p, m)` is built and shared process-wide.
pub fn make_field(p: u64, m: u32) -> Result<Arc<FieldContext>, FieldError> {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ctx) = cache.lock().unwrap().get(&(p, m)) {
        return Ok(ctx.clone());
    }
    let ctx = Arc::new(FieldContext::new(p, m)?);
    Ok(cache.lock().unwrap().entry((p, m)).or_insert(ctx).clone())
}

/// Smallest `s` with `n | q^s - 1`.
pub fn splitting_degree(n: u64, q: u64) -> Result<u64, FieldError> {
    arith::multiplicative_order(q, n).ok_or(FieldError::NotCoprime { n, q })
}

impl FieldContext {
    pub fn new(p: u64, m: u32) -> Result<Self, FieldError> {
        Self::with_ceiling(p, m, DEFAULT_SIZE_CEILING)
    }

    pub fn with_ceiling(p: u64, m: u32, ceiling: u64) -> Result<Self, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = p
            .checked_pow(m)
            .filter(|&s| s <= ceiling.min(DEFAULT_SIZE_CEILING))
            .ok_or(FieldError::TooLarge { p, m, ceiling })?;
        let modulus = lowest_irreducible(p, m as usize);
        let modulus_bits = if p == 2 {
            modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        let mut ctx = FieldContext {
            id: NEXT_CONTEXT_ID.fetch_add(1, Ordering::Relaxed),
            p,
            m,
            size,
            modulus,
            modulus_bits,
            tables: None,
            generator: 0,
            group_factors: arith::prime_factors(size - 1),
        };
        ctx.generator = ctx.find_generator();
        if size <= LOG_TABLE_LIMIT {
            ctx.build_tables();
        }
        Ok(ctx)
    }

    fn find_generator(&self) -> u32 {
        let group = self.size - 1;
        if group == 1 {
            return 1;
        }
        (1..self.size)
            .map(|r| self.wrap(r as u32))
            .find(|&g| self.group_factors.iter().all(|&r| self.pow(g, group / r).repr != 1))
            .expect("multiplicative group of a finite field is cyclic")
            .repr
    }

    fn build_tables(&mut self) {
        let order = (self.size - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![0u32; self.size as usize];
        let g = self.wrap(self.generator);
        let mut x = self.one();
        for (i, e) in exp.iter_mut().take(order.max(1)).enumerate() {
            *e = x.repr;
            log[x.repr as usize] = i as u32;
            x = self.mul_generic(x, g);
        }
        exp.copy_within(0..order, order);
        self.tables = Some(LogTables { exp, log });
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Monic modulus, constant coefficient first (length `m + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// The smallest element (by index) generating the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        self.wrap(self.generator)
    }

    fn wrap(&self, repr: u32) -> FieldElement {
        FieldElement { ctx: self.id, repr }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    pub fn element(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index >= self.size {
            return Err(FieldError::BadIndex { index, size: self.size });
        }
        Ok(self.wrap(index as u32))
    }

    /// The prime-field element `c mod p`.
    pub fn from_int(&self, c: i64) -> FieldElement {
        self.wrap(arith::modulo(c, self.p) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size).map(|r| self.wrap(r as u32))
    }

    pub fn owns(&self, a: FieldElement) -> bool {
        a.ctx == self.id
    }

    fn digits(&self, mut r: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        for d in out.iter_mut() {
            *d = r % self.p;
            r /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u64]) -> u32 {
        d.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as u32
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u64> {
        self.digits(a.repr as u64)
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> FieldElement {
        let mut d = vec![0u64; self.m as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            d[i % self.m as usize] = (d[i % self.m as usize] + c) % self.p;
        }
        self.wrap(self.undigits(&d))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.owns(a) && self.owns(b));
        if self.p == 2 {
            return self.wrap(a.repr ^ b.repr);
        }
        if self.m == 1 {
            return self.wrap(((a.repr as u64 + b.repr as u64) % self.p) as u32);
        }
        let da = self.digits(a.repr as u64);
        let db = self.digits(b.repr as u64);
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.wrap(self.undigits(&s))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(self.owns(a));
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self
            .digits(a.repr as u64)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.wrap(self.undigits(&d))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.owns(a) && self.owns(b));
        if a.repr == 0 || b.repr == 0 {
            return self.zero();
        }
        match &self.tables {
            Some(t) => {
                let i = t.log[a.repr as usize] as usize + t.log[b.repr as usize] as usize;
                self.wrap(t.exp[i])
            }
            None => self.mul_generic(a, b),
        }
    }

    fn mul_generic(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return self.wrap(self.mul_binary(a.repr as u64, b.repr as u64));
        }
        if self.m == 1 {
            return self.wrap(((a.repr as u64 * b.repr as u64) % self.p) as u32);
        }
        let m = self.m as usize;
        let p = self.p as u128;
        let da = self.digits(a.repr as u64);
        let db = self.digits(b.repr as u64);
        let mut prod = vec![0u128; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // X^m = -(modulus[0] + ... + modulus[m-1] X^{m-1})
            for i in 0..m {
                let t = c * (self.modulus[i] as u128) % p;
                prod[k - m + i] = (prod[k - m + i] + p - t) % p;
            }
        }
        let d: Vec<u64> = prod[..m].iter().map(|&c| c as u64).collect();
        self.wrap(self.undigits(&d))
    }

    fn mul_binary(&self, a: u64, b: u64) -> u32 {
        let mut prod = 0u64;
        let mut bb = b;
        let mut shift = 0;
        while bb != 0 {
            if bb & 1 == 1 {
                prod ^= a << shift;
            }
            bb >>= 1;
            shift += 1;
        }
        let m = self.m;
        for k in (m..2 * m).rev() {
            if prod >> k & 1 == 1 {
                prod ^= self.modulus_bits << (k - m);
            }
        }
        prod as u32
    }

    /// `a^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        debug_assert!(self.owns(a));
        if e == 0 {
            return self.one();
        }
        if a.repr == 0 {
            return self.zero();
        }
        let order = self.size - 1;
        let e = e % order;
        if let Some(t) = &self.tables {
            let l = (t.log[a.repr as usize] as u64 * e) % order;
            return self.wrap(t.exp[l as usize]);
        }
        let mut acc = self.one();
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_generic(acc, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero (use [`Self::try_inv`] to get
    /// an error instead).
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    fn check(&self, a: FieldElement) -> Result<(), FieldError> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn try_neg(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        if a.repr == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let order = (self.size - 1) as usize;
                let l = t.log[a.repr as usize] as usize;
                self.wrap(t.exp[(order - l) % order])
            }
            None => self.pow(a, self.size - 2),
        })
    }

    pub fn try_div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        let b_inv = self.try_inv(b)?;
        Ok(self.mul(a, b_inv))
    }

    /// `a^e` for any integer exponent; negative exponents go through the
    /// inverse.
    pub fn try_pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        if e >= 0 {
            return Ok(self.pow(a, e as u64));
        }
        let inv = self.try_inv(a)?;
        Ok(self.pow(inv, e.unsigned_abs()))
    }

    /// `a^e` where `a` is known to be nonzero and the exponent may be
    /// negative.
    pub fn pow_signed(&self, a: FieldElement, e: i64) -> FieldElement {
        self.try_pow(a, e).expect("negative power of zero")
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Option<u64> {
        if a.repr == 0 || !self.owns(a) {
            return None;
        }
        let mut ord = self.size - 1;
        for &r in &self.group_factors {
            while ord.is_multiple_of(r) && self.pow(a, ord / r).repr == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Deterministic element of exact multiplicative order `n`: the fixed
    /// generator raised to `(p^m - 1)/n`.
    pub fn element_of_order(&self, n: u64) -> Result<FieldElement, FieldError> {
        let group = self.size - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(FieldError::NoSuchOrder { n, group });
        }
        Ok(self.pow(self.generator(), group / n))
    }
}

/// A field embedding `GF(p^k) -> GF(p^K)` for `k | K`, defined by sending the
/// small field's `X` to the smallest-index root of its modulus in the big
/// field.
#[derive(Debug, Clone)]
pub struct Embedding {
    small: Arc<FieldContext>,
    big: Arc<FieldContext>,
    forward: Vec<FieldElement>,
    backward: HashMap<FieldElement, FieldElement>,
}

impl Embedding {
    pub fn new(small: &Arc<FieldContext>, big: &Arc<FieldContext>) -> Result<Self, FieldError> {
        if small.p != big.p || !big.m.is_multiple_of(small.m) {
            return Err(FieldError::NotSubfield {
                small: small.size,
                big: big.size,
            });
        }
        // Elements of the subfield: 0 and the powers of w, a generator of its
        // multiplicative group.
        let w = big.pow(big.generator(), (big.size - 1) / (small.size - 1));
        let eval_modulus = |x: FieldElement| {
            small
                .modulus
                .iter()
                .rev()
                .fold(big.zero(), |acc, &c| big.add(big.mul(acc, x), big.from_int(c as i64)))
        };
        let root = std::iter::once(big.zero())
            .chain((0..small.size - 1).map(|j| big.pow(w, j)))
            .filter(|&x| eval_modulus(x).is_zero())
            .min()
            .expect("irreducible polynomial of degree k splits in GF(p^K) when k | K");
        let mut forward = Vec::with_capacity(small.size as usize);
        let mut backward = HashMap::with_capacity(small.size as usize);
        for a in small.elements() {
            let coeffs = small.coefficients(a);
            let mut img = big.zero();
            let mut power = big.one();
            for &c in &coeffs {
                img = big.add(img, big.mul(big.from_int(c as i64), power));
                power = big.mul(power, root);
            }
            forward.push(img);
            backward.insert(img, a);
        }
        Ok(Embedding {
            small: small.clone(),
            big: big.clone(),
            forward,
            backward,
        })
    }

    pub fn small(&self) -> &Arc<FieldContext> {
        &self.small
    }

    pub fn big(&self) -> &Arc<FieldContext> {
        &self.big
    }

    pub fn map(&self, a: FieldElement) -> FieldElement {
        debug_assert!(self.small.owns(a));
        self.forward[a.repr as usize]
    }

    /// Preimage of a big-field element, if it lies in the image.
    pub fn pull_back(&self, a: FieldElement) -> Option<FieldElement> {
        self.backward.get(&a).copied()
    }
}

// Polynomials over Z_p as coefficient vectors (constant first), used only to
// pick the modulus.

fn zp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn zp_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = zp_trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = arith::mod_inverse(f[df] as i64, p).unwrap() as u128;
    while r.len() > df {
        let top = r.len() - 1;
        let c = (r[top] as u128 * lead_inv % p as u128) as u64;
        for i in 0..=df {
            let t = (c as u128 * f[i] as u128 % p as u128) as u64;
            r[top - df + i] = (r[top - df + i] + p - t) % p;
        }
        r = zp_trim(r);
    }
    r
}

fn zp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    zp_rem(&prod, f, p)
}

fn zp_powmod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = zp_rem(a, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = zp_mulmod(&acc, &base, f, p);
        }
        base = zp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = zp_trim(a.to_vec());
    let mut b = zp_trim(b.to_vec());
    while !b.is_empty() {
        let r = zp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: `f` of degree `m` is irreducible over GF(p) iff
/// `f | X^{p^m} - X` and `gcd(f, X^{p^{m/r}} - X) = 1` for every prime `r | m`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = zp_trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[k] = X^{p^k} mod f
    let mut frob = vec![zp_rem(&x, &f, p)];
    for k in 0..m {
        let next = zp_powmod(&frob[k], p, &f, p);
        frob.push(next);
    }
    if frob[m] != zp_rem(&x, &f, p) {
        return false;
    }
    arith::prime_factors(m as u64).into_iter().all(|r| {
        let mut h = frob[m / r as usize].clone();
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        let g = zp_gcd(&f, &h, p);
        g.len() == 1
    })
}

fn lowest_irreducible(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    let count = p.pow(m as u32);
    (0..count)
        .map(|idx| {
            let mut f = Vec::with_capacity(m + 1);
            let mut r = idx;
            for _ in 0..m {
                f.push(r % p);
                r /= p;
            }
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;

    // Trial division by every monic polynomial of degree 1..=deg/2.
    fn irreducible_by_trial_division(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            for idx in 0..p.pow(d as u32) {
                let mut g: Vec<u64> = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
                g.push(1);
                if zp_rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn gf2_is_prime_field() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.size(), 2);
        let one = f.one();
        assert_eq!(f.add(one, one), f.zero());
        assert_eq!(f.mul(one, one), one);
    }

    #[test]
    fn gf256_modulus_is_0x11b() {
        let f = make_field(2, 8).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert!(f.has_log_tables());
        assert_eq!(f.order(f.generator()), Some(255));
    }

    #[test]
    fn moduli_pass_independent_irreducibility_test() {
        for (p, m) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 8),
            (2, 10),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 2),
            (5, 3),
            (7, 2),
            (2, 12),
        ] {
            let f = make_field(p, m).unwrap();
            assert!(irreducible_by_trial_division(f.modulus(), p), "GF({p}^{m})");
        }
    }

    #[test]
    fn modulus_is_lowest_irreducible() {
        // Every smaller candidate must be reducible.
        for (p, m) in [(2u64, 4usize), (3, 3), (2, 8)] {
            let f = make_field(p, m as u32).unwrap();
            let target: u64 = f.modulus()[..m].iter().rev().fold(0, |acc, &c| acc * p + c);
            for idx in 0..target {
                let mut g: Vec<u64> = (0..m).map(|i| idx / p.pow(i as u32) % p).collect();
                g.push(1);
                assert!(!irreducible_by_trial_division(&g, p));
            }
        }
    }

    #[test]
    fn rabin_rejects_product_of_coprime_degrees() {
        // (X^2+X+1)(X^3+X+1) over GF(2): no roots in GF(2) but reducible.
        let f = [1, 0, 0, 1, 1, 1];
        assert!(!is_irreducible(&f, 2));
        assert!(!irreducible_by_trial_division(&f, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(make_field(2, 33), Err(FieldError::TooLarge { .. })));
        assert!(matches!(
            FieldContext::with_ceiling(3, 5, 100),
            Err(FieldError::TooLarge { .. })
        ));
        let a = make_field(2, 4).unwrap();
        let b = FieldContext::new(2, 4).unwrap();
        assert_eq!(a.try_add(a.one(), b.one()), Err(FieldError::ContextMismatch));
        assert_eq!(a.try_div(a.one(), a.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(a.try_pow(a.zero(), -1), Err(FieldError::DivisionByZero));
        assert!(matches!(a.element_of_order(7), Err(FieldError::NoSuchOrder { .. })));
        assert!(matches!(a.element(16), Err(FieldError::BadIndex { .. })));
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(17, 2), Ok(8));
        assert_eq!(splitting_degree(1, 2), Ok(1));
        assert_eq!(splitting_degree(3, 2), Ok(2));
        assert_eq!(splitting_degree(51, 2), Ok(8));
        assert!(splitting_degree(6, 2).is_err());
        for n in (1..200u64).filter(|n| n % 2 == 1) {
            let s = splitting_degree(n, 2).unwrap();
            assert_eq!(arith::mod_pow(2, s, n), 1 % n);
            for k in 1..s {
                assert_ne!(arith::mod_pow(2, k, n), 1 % n);
            }
        }
    }

    #[test]
    fn element_orders_by_power_loop() {
        let f = make_field(2, 8).unwrap();
        for n in [1u64, 3, 5, 15, 17, 51, 85, 255] {
            let a = f.element_of_order(n).unwrap();
            let mut x = a;
            for k in 1..n {
                assert_ne!(x, f.one(), "order {n} element has power {k} = 1");
                x = f.mul(x, a);
            }
            assert_eq!(x, f.one());
        }
        assert_eq!(f.element_of_order(1).unwrap(), f.one());
    }

    #[test]
    fn large_field_without_tables() {
        let f = make_field(2, 21).unwrap();
        assert!(!f.has_log_tables());
        let g = f.generator();
        assert_eq!(f.pow(g, f.size() - 1), f.one());
        let x = f.element(123_456).unwrap();
        assert_eq!(f.mul(x, f.inv(x)), f.one());
        let o = f.element_of_order(7).unwrap();
        assert_eq!(f.order(o), Some(7));
        let f3 = make_field(3, 13).unwrap();
        let y = f3.element(1_000_000).unwrap();
        assert_eq!(f3.mul(y, f3.inv(y)), f3.one());
        assert_eq!(f3.pow(y, f3.size() - 1), f3.one());
    }

    #[test]
    fn tables_agree_with_generic_multiplication() {
        for (p, m) in [(2, 6), (3, 3), (5, 2)] {
            let f = make_field(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul_generic(a, b));
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = make_field(2, 2).unwrap();
        let big = make_field(2, 8).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e.map(small.add(a, b)), big.add(e.map(a), e.map(b)));
                assert_eq!(e.map(small.mul(a, b)), big.mul(e.map(a), e.map(b)));
            }
            assert_eq!(e.pull_back(e.map(a)), Some(a));
        }
        let prime = make_field(3, 1).unwrap();
        let big3 = make_field(3, 4).unwrap();
        let e3 = Embedding::new(&prime, &big3).unwrap();
        assert_eq!(e3.map(prime.from_int(2)), big3.from_int(2));
        assert!(Embedding::new(&make_field(2, 3).unwrap(), &big).is_err());
    }
}
