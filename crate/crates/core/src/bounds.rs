//! Lower bounds on the minimum distance of a cyclic code `A`.
//!
//! All four bounds are witnessed by the same kind of certificate: integers
//! `f1, f2, m1, m2, delta, nu` such that for `0 <= i <= delta-2` and
//! `0 <= j <= nu` the exponent pair
//!
//! * `(f1 + i m1 + j, f2 + i m2 + j)` (BCH, HT and GEN1), or
//! * `(f1 + i m1 + j, f2 + i m2)` (GEN2)
//!
//! has its first entry in `D_A` or its second in `D_B`. BCH and HT use no
//! associated code, which amounts to `n_b = 1` and `D_B` empty. The bound
//! values are
//!
//! | variant | value |
//! |---------|-------|
//! | BCH     | `delta` |
//! | HT      | `delta + nu` |
//! | GEN1    | `ceil((delta + nu) / d_b)` |
//! | GEN2    | `ceil(delta / d_b) + nu` |
//!
//! The search walks each direction `(m1, m2)` once: since the lengths are
//! coprime and the steps are units, `i -> (f1 + i m1, f2 + i m2)` visits the
//! whole grid `Z_{n_a} x Z_{n_b}` in a single cycle, so the longest admissible
//! run from every start point comes out of one backward pass.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclic::{CodeView, CyclicCode, DefiningSet};
use crate::distance::DistanceOracle;
use crate::error::BoundError;
use crate::poly::Poly;
use crate::product;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Bch,
    Ht,
    Gen1,
    Gen2,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Bch, Variant::Ht, Variant::Gen1, Variant::Gen2];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Bch => "bch",
            Variant::Ht => "ht",
            Variant::Gen1 => "gen1",
            Variant::Gen2 => "gen2",
        }
    }

    pub fn uses_associated_code(self) -> bool {
        matches!(self, Variant::Gen1 | Variant::Gen2)
    }

    /// Whether the `j` shift also moves the second coordinate.
    fn shifts_b(self) -> bool {
        !matches!(self, Variant::Gen2)
    }

    /// The bound certified by `(delta, nu)` with an associated code of
    /// distance `d_b` (pass 1 for BCH/HT).
    pub fn value(self, delta: u64, nu: u64, d_b: u64) -> u64 {
        match self {
            Variant::Bch => delta,
            Variant::Ht => delta + nu,
            Variant::Gen1 => arith::ceil_div(delta + nu, d_b),
            Variant::Gen2 => arith::ceil_div(delta, d_b) + nu,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bch" => Ok(Variant::Bch),
            "ht" => Ok(Variant::Ht),
            "gen1" => Ok(Variant::Gen1),
            "gen2" => Ok(Variant::Gen2),
            other => Err(format!("unknown variant `{other}` (expected bch, ht, gen1 or gen2)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub variant: Variant,
    pub n_a: u64,
    /// Length of the associated code; 1 for BCH and HT.
    pub n_b: u64,
    /// Minimum distance of the associated code; 1 for BCH and HT.
    pub d_b: u64,
    pub f1: i64,
    pub f2: i64,
    pub m1: i64,
    pub m2: i64,
    pub delta: u64,
    pub nu: u64,
    pub value: u64,
}

impl BoundCertificate {
    /// Reduces `f1, m1` mod `n_a` and `f2, m2` mod `n_b`.
    pub fn normalized(&self) -> BoundCertificate {
        BoundCertificate {
            f1: arith::modulo(self.f1, self.n_a) as i64,
            f2: arith::modulo(self.f2, self.n_b) as i64,
            m1: if self.n_a == 1 {
                self.m1
            } else {
                arith::modulo(self.m1, self.n_a) as i64
            },
            m2: if self.n_b == 1 {
                self.m2
            } else {
                arith::modulo(self.m2, self.n_b) as i64
            },
            ..self.clone()
        }
    }

    /// The exponent pair for coefficient `i` of sequence `j`.
    pub fn exponents(&self, i: u64, j: u64) -> (i64, i64) {
        let (i, j) = (i as i64, j as i64);
        let e1 = self.f1 + i * self.m1 + j;
        let e2 = self.f2 + i * self.m2 + if self.variant.shifts_b() { j } else { 0 };
        (e1, e2)
    }

    /// Arithmetic side conditions; the error names the first one violated.
    pub fn check_invariants(&self) -> Result<(), String> {
        let fail = |s: String| Err(format!("invariant: {s}"));
        if self.n_a == 0 || self.n_b == 0 {
            return fail("lengths must be positive".into());
        }
        if self.delta < 2 {
            return fail(format!("delta = {} < 2", self.delta));
        }
        if self.m1 == 0 || arith::gcd(self.n_a, self.m1.unsigned_abs()) != 1 {
            return fail(format!("gcd(n_a, m1) = gcd({}, {}) != 1", self.n_a, self.m1));
        }
        if self.variant == Variant::Bch && self.nu != 0 {
            return fail("BCH requires nu = 0".into());
        }
        if self.variant.uses_associated_code() {
            if self.m2 == 0 || arith::gcd(self.n_b, self.m2.unsigned_abs()) != 1 {
                return fail(format!("gcd(n_b, m2) = gcd({}, {}) != 1", self.n_b, self.m2));
            }
            if arith::gcd(self.n_a, self.n_b) != 1 {
                return fail(format!("gcd(n_a, n_b) = gcd({}, {}) != 1", self.n_a, self.n_b));
            }
            if self.d_b == 0 {
                return fail("d_b must be positive".into());
            }
            if self.variant == Variant::Gen2 && self.nu > 0 && self.delta <= self.d_b {
                return fail(format!(
                    "GEN2 with nu > 0 needs delta > d_b (delta = {}, d_b = {})",
                    self.delta, self.d_b
                ));
            }
        } else if self.n_b != 1 || self.d_b != 1 {
            return fail(format!("{} takes no associated code", self.variant));
        }
        let expect = self.variant.value(self.delta, self.nu, self.d_b);
        if self.value != expect {
            return fail(format!("claimed value {} but the parameters give {expect}", self.value));
        }
        Ok(())
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variant={}", self.variant)?;
        writeln!(f, "value={}", self.value)?;
        writeln!(f, "n_a={}", self.n_a)?;
        writeln!(f, "n_b={}", self.n_b)?;
        writeln!(f, "d_b={}", self.d_b)?;
        writeln!(f, "f1={}", self.f1)?;
        writeln!(f, "f2={}", self.f2)?;
        writeln!(f, "m1={}", self.m1)?;
        writeln!(f, "m2={}", self.m2)?;
        writeln!(f, "delta={}", self.delta)?;
        write!(f, "nu={}", self.nu)
    }
}

/// A bound value, with the certificate behind it. Value 1 (every nonzero
/// code) comes without a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub value: u64,
    pub certificate: Option<BoundCertificate>,
}

/// The first `(i, j)` whose exponent pair is in neither defining set.
/// `db = None` means no associated code.
pub fn first_vanishing_failure(
    da: &DefiningSet,
    db: Option<&DefiningSet>,
    cert: &BoundCertificate,
) -> Option<(u64, u64)> {
    for j in 0..=cert.nu {
        for i in 0..cert.delta.saturating_sub(1) {
            let (e1, e2) = cert.exponents(i, j);
            let in_a = da.contains(arith::modulo(e1, da.modulus()));
            let in_b = db.is_some_and(|db| db.contains(arith::modulo(e2, db.modulus())));
            if !(in_a || in_b) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Residue form of the vanishing condition: true iff every coefficient
/// `i < delta-1` of every sequence `j <= nu` vanishes for all codeword pairs.
#[allow(clippy::too_many_arguments)]
pub fn check_vanishing_condition(
    da: &DefiningSet,
    db: Option<&DefiningSet>,
    f1: i64,
    f2: i64,
    m1: i64,
    m2: i64,
    delta: u64,
    nu: u64,
    variant: Variant,
) -> Result<bool, BoundError> {
    let (n_b, d_b) = match db {
        Some(d) => (d.modulus(), 1),
        None => (1, 1),
    };
    let cert = BoundCertificate {
        variant,
        n_a: da.modulus(),
        n_b,
        d_b,
        f1,
        f2,
        m1,
        m2,
        delta,
        nu,
        value: variant.value(delta, nu, d_b),
    };
    if let Err(e) = cert.check_invariants() {
        // d_b is irrelevant to the residue test
        if !e.contains("delta > d_b") {
            return Err(BoundError::Invariant(e));
        }
    }
    Ok(first_vanishing_failure(da, db, &cert).is_none())
}

/// Search ranges. Unset fields mean "all": every unit for `m1`/`m2` and no
/// limit on `nu` beyond the cap.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub m1: Option<Vec<u64>>,
    pub m2: Option<Vec<u64>>,
    pub max_nu: Option<u64>,
    /// Enforce `nu + 1 <= delta - 1`. Defaults to on for GEN1/GEN2 and off
    /// for BCH/HT.
    pub cap_nu: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    value: u64,
    delta: u64,
    nu: u64,
    m1: u64,
    m2: u64,
    f1: u64,
    f2: u64,
}

impl Candidate {
    /// Larger is better: value, then delta, then smaller nu, then smaller
    /// `(m1, m2, f1, f2)`.
    fn better_than(&self, other: &Candidate) -> bool {
        let key = |c: &Candidate| (c.value, c.delta, std::cmp::Reverse((c.nu, c.m1, c.m2, c.f1, c.f2)));
        key(self) > key(other)
    }
}

fn pick(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

struct Grid<'a> {
    da: &'a DefiningSet,
    db: &'a DefiningSet,
    na: u64,
    nb: u64,
}

impl Grid<'_> {
    fn ok(&self, x: u64, y: u64) -> bool {
        self.da.contains(x) || self.db.contains(y)
    }

    /// `run[x * nb + y]`: number of consecutive admissible points starting at
    /// `(x, y)` in direction `(m1, m2)`, capped at `na * nb`.
    fn runs(&self, m1: u64, m2: u64) -> Vec<u32> {
        let big_n = (self.na * self.nb) as usize;
        let point = |k: usize| {
            let k = k as u64;
            ((k * m1) % self.na, (k * m2) % self.nb)
        };
        let idx = |(x, y): (u64, u64)| (x * self.nb + y) as usize;
        let mut run = vec![0u32; big_n];
        let Some(k0) = (0..big_n).find(|&k| {
            let (x, y) = point(k);
            !self.ok(x, y)
        }) else {
            run.fill(big_n as u32);
            return run;
        };
        let mut next = 0u32;
        for t in 1..=big_n {
            let k = (k0 + big_n - t) % big_n;
            let p = point(k);
            next = if self.ok(p.0, p.1) { next + 1 } else { 0 };
            run[idx(p)] = next;
        }
        run
    }

    fn best_in_direction(
        &self,
        variant: Variant,
        d_b: u64,
        m1: u64,
        m2: u64,
        max_nu: u64,
        cap: bool,
    ) -> Option<Candidate> {
        let run = self.runs(m1, m2);
        let mut best: Option<Candidate> = None;
        for f1 in 0..self.na {
            for f2 in 0..self.nb {
                let mut r = u32::MAX;
                for nu in 0..=max_nu {
                    let x = (f1 + nu) % self.na;
                    let y = if variant.shifts_b() { (f2 + nu) % self.nb } else { f2 };
                    r = r.min(run[(x * self.nb + y) as usize]);
                    if r == 0 {
                        break;
                    }
                    let delta = r as u64 + 1;
                    if cap && nu + 1 > delta - 1 {
                        break;
                    }
                    if variant == Variant::Gen2 && nu > 0 && delta <= d_b {
                        break;
                    }
                    let c = Candidate {
                        value: variant.value(delta, nu, d_b),
                        delta,
                        nu,
                        m1,
                        m2,
                        f1,
                        f2,
                    };
                    best = pick(best, Some(c));
                    if variant == Variant::Bch {
                        break;
                    }
                }
            }
        }
        best
    }
}

/// Exhaustive search over directions, start points and `nu`.
fn search(da: &DefiningSet, db: &DefiningSet, d_b: u64, variant: Variant, opts: &SearchOptions) -> BoundResult {
    let (na, nb) = (da.modulus(), db.modulus());
    let grid = Grid { da, db, na, nb };
    let cap = opts.cap_nu.unwrap_or(variant.uses_associated_code());
    let max_nu = match variant {
        Variant::Bch => 0,
        _ => opts.max_nu.unwrap_or(na * nb),
    };
    let units = |n: u64, given: &Option<Vec<u64>>| -> Vec<u64> {
        match given {
            Some(v) => v
                .iter()
                .map(|&m| m % n.max(1))
                .map(|m| if n == 1 { 1 } else { m })
                .filter(|&m| arith::gcd(m, n) == 1)
                .collect(),
            None => arith::units(n),
        }
    };
    let dirs: Vec<(u64, u64)> = units(na, &opts.m1)
        .into_iter()
        .flat_map(|m1| units(nb, &opts.m2).into_iter().map(move |m2| (m1, m2)))
        .collect();
    let each = |&(m1, m2): &(u64, u64)| grid.best_in_direction(variant, d_b, m1, m2, max_nu, cap);

    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        dirs.par_iter().map(each).reduce(|| None, pick)
    };
    #[cfg(not(feature = "parallel"))]
    let best = dirs.iter().map(each).fold(None, pick);

    match best {
        Some(c) => BoundResult {
            value: c.value,
            certificate: Some(BoundCertificate {
                variant,
                n_a: na,
                n_b: nb,
                d_b,
                f1: c.f1 as i64,
                f2: c.f2 as i64,
                m1: c.m1 as i64,
                m2: c.m2 as i64,
                delta: c.delta,
                nu: c.nu,
                value: c.value,
            }),
        },
        None => BoundResult {
            value: 1,
            certificate: None,
        },
    }
}

/// Largest `delta` with `delta - 1` consecutive exponents (step coprime to
/// `n`) in `D`.
pub fn bch_bound(d: &DefiningSet) -> BoundResult {
    search(d, &DefiningSet::empty(1), 1, Variant::Bch, &SearchOptions::default())
}

/// Best Hartmann-Tzeng bound `delta + nu`.
pub fn ht_bound(d: &DefiningSet) -> BoundResult {
    ht_bound_with(d, &SearchOptions::default())
}

pub fn ht_bound_with(d: &DefiningSet, opts: &SearchOptions) -> BoundResult {
    search(d, &DefiningSet::empty(1), 1, Variant::Ht, opts)
}

/// GEN1 or GEN2 bound of `A` with the associated code `B` of minimum
/// distance `d_b`.
pub fn generalized_bound(
    a: &CyclicCode,
    b: &CyclicCode,
    d_b: u64,
    variant: Variant,
    opts: &SearchOptions,
) -> Result<BoundResult, BoundError> {
    if !variant.uses_associated_code() {
        return Err(BoundError::Invariant(format!("{variant} takes no associated code")));
    }
    if arith::gcd(a.length(), b.length()) != 1 {
        return Err(crate::error::ProductError::NotCoprime(a.length(), b.length()).into());
    }
    if d_b == 0 {
        return Err(BoundError::Invariant("d_b must be positive".into()));
    }
    Ok(search(a.defining_set(), b.defining_set(), d_b, variant, opts))
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Rejected(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Valid => None,
            Verdict::Rejected(r) => Some(r),
        }
    }
}

/// Number of random codeword pairs in the semantic check.
pub const SEMANTIC_TRIALS: usize = 64;

fn random_codeword(code: &CyclicCode, rng: &mut ChaCha8Rng) -> Poly {
    let msg: Vec<u64> = (0..code.dimension()).map(|_| rng.gen_range(0..code.q())).collect();
    code.encode(&msg).expect("message has k symbols")
}

/// Checks the certificate against `A` (and `B` for GEN variants): side
/// conditions, `d_b` against the distance oracle, the residue test, and an
/// evaluation of the sums for random codeword pairs in the joint field.
pub fn verify_certificate(cert: &BoundCertificate, a: &CyclicCode, b: Option<&CyclicCode>) -> Verdict {
    match verify_inner(cert, a, b) {
        Ok(()) => Verdict::Valid,
        Err(reason) => Verdict::Rejected(reason),
    }
}

fn verify_inner(cert: &BoundCertificate, a: &CyclicCode, b: Option<&CyclicCode>) -> Result<(), String> {
    cert.check_invariants()?;
    if cert.n_a != a.length() {
        return Err(format!(
            "invariant: certificate has n_a = {}, code has {}",
            cert.n_a,
            a.length()
        ));
    }
    let b = match (cert.variant.uses_associated_code(), b) {
        (true, Some(b)) => {
            if b.length() != cert.n_b {
                return Err(format!(
                    "invariant: certificate has n_b = {}, code has {}",
                    cert.n_b,
                    b.length()
                ));
            }
            if b.q() != a.q() {
                return Err("invariant: codes are over different alphabets".into());
            }
            let d = DistanceOracle::default()
                .min_distance(b)
                .map_err(|e| format!("d_b could not be confirmed: {e}"))?;
            if d != cert.d_b {
                return Err(format!(
                    "invariant: d_b = {} but the associated code has distance {d}",
                    cert.d_b
                ));
            }
            Some(b)
        }
        (true, None) => return Err("invariant: associated code missing".into()),
        (false, _) => None,
    };
    if let Some((i, j)) = first_vanishing_failure(a.defining_set(), b.map(|b| b.defining_set()), cert) {
        return Err(format!("coefficient i = {i}, j = {j} nonzero"));
    }

    let (va, vb): (CodeView, Option<CodeView>) = match b {
        Some(b) => {
            let k = product::joint_field(a, b).map_err(|e| e.to_string())?;
            (
                a.view_in(&k).map_err(|e| e.to_string())?,
                Some(b.view_in(&k).map_err(|e| e.to_string())?),
            )
        }
        None => (a.view().clone(), None),
    };
    let k = va.field().clone();
    let seed = [cert.f1, cert.f2, cert.m1, cert.m2, cert.delta as i64, cert.nu as i64]
        .iter()
        .fold(cert.n_a * 1_000_003 + cert.n_b, |h, &x| {
            h.wrapping_mul(31).wrapping_add(x as u64)
        });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SEMANTIC_TRIALS {
        let wa = random_codeword(a, &mut rng);
        let wb = b.map(|b| random_codeword(b, &mut rng));
        for j in 0..=cert.nu {
            for i in 0..cert.delta - 1 {
                let (e1, e2) = cert.exponents(i, j);
                let mut s = va.eval(&wa, e1);
                if let (Some(vb), Some(wb)) = (&vb, &wb) {
                    s = k.mul(s, vb.eval(wb, e2));
                }
                if !s.is_zero() {
                    return Err(format!(
                        "semantic check: coefficient i = {i}, j = {j} nonzero for a sampled codeword pair"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Exponents `f + i m + j s` modulo `n_a n_b`, where `(f, m)` and
/// `(0, s)` are the images of `(f1, f2, m1, m2)` and `(0, 0, 1, 1)` under
/// [`product::crt_parameters`]. Rows are indexed by `j`, columns by `i`.
pub fn transported_exponents(cert: &BoundCertificate) -> Result<Vec<Vec<u64>>, BoundError> {
    let (na, nb) = (cert.n_a, cert.n_b);
    let (f, m) = product::crt_parameters(cert.f1, cert.f2, cert.m1, cert.m2, na, nb)?;
    let (_, s) = product::crt_parameters(0, 0, 1, 1, na, nb)?;
    let big_n = (na * nb) as u128;
    Ok((0..=cert.nu)
        .map(|j| {
            (0..cert.delta - 1)
                .map(|i| ((f as u128 + i as u128 * m as u128 + j as u128 * s as u128) % big_n) as u64)
                .collect()
        })
        .collect())
}
