//! Decoding `A` up to the first generalized bound.
//!
//! Given a GEN1 certificate `(f1, f2, m1, m2, delta, nu)` with associated
//! code `B` and a codeword `b(X)` of `B` of weight `d_b`, the `nu + 1`
//! syndrome sequences
//!
//! ```text
//! S^{(j)}_i = r(alpha^{f1 + i m1 + j}) * b(beta^{f2 + i m2 + j}),  0 <= i <= delta - 2
//! ```
//!
//! depend only on the error. `t` errors at positions `E` produce sequences
//! generated by one shift register whose connection polynomial is
//! `Λ(X) = prod_{p in E, z in supp b} (1 - X alpha^{p m1} beta^{z m2})`, of
//! degree `d_b t`. The decoder finds the shortest common register, reads the
//! positions off its roots (all `d_b` roots per position must be present),
//! solves a linear system for the values and re-checks the result against
//! the code.

use std::sync::Arc;

use crate::bounds::{verify_certificate, BoundCertificate, Variant};
use crate::cyclic::{CodeView, CyclicCode};
use crate::distance;
use crate::error::{BoundError, DecodeError};
use crate::gf::{FieldContext, FieldElement};
use crate::linalg;
use crate::poly::Poly;
use crate::product;

/// `floor((delta + nu - 1) / (2 d_b))` for a GEN1 certificate.
pub fn decoding_radius(cert: &BoundCertificate) -> Result<usize, DecodeError> {
    if cert.variant != Variant::Gen1 {
        return Err(DecodeError::WrongVariant);
    }
    if cert.d_b == 0 {
        return Err(BoundError::Invariant("d_b must be positive".into()).into());
    }
    Ok(((cert.delta + cert.nu).saturating_sub(1) / (2 * cert.d_b)) as usize)
}

/// `nu + 1` sequences of length `delta - 1` over the joint field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeSet {
    pub sequences: Vec<Vec<FieldElement>>,
}

impl SyndromeSet {
    pub fn is_zero(&self) -> bool {
        self.sequences.iter().flatten().all(|s| s.is_zero())
    }

    pub fn len(&self) -> usize {
        self.sequences.first().map_or(0, |s| s.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn add(&self, other: &SyndromeSet, ctx: &FieldContext) -> SyndromeSet {
        SyndromeSet {
            sequences: self
                .sequences
                .iter()
                .zip(&other.sequences)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect())
                .collect(),
        }
    }
}

/// Shortest `Λ` (with `Λ(0) = 1`) and its register length `L` such that
/// `sum_{i=0}^{L} Λ_i s_{k-i} = 0` for every sequence and every
/// `L <= k < len`.
///
/// Berlekamp-Massey over all sequences at once: positions are scanned in
/// order and, at each position, the sequences in order. Each sequence keeps
/// the register it had before the last length change it caused, together
/// with the discrepancy and position at that time; a discrepancy on sequence
/// `j` is cancelled with sequence `j`'s stored register.
pub fn synthesize(sequences: &[Vec<FieldElement>], ctx: &FieldContext) -> (Poly, usize) {
    let len = sequences.first().map_or(0, |s| s.len());
    debug_assert!(sequences.iter().all(|s| s.len() == len));
    struct Aux {
        poly: Poly,
        length: usize,
        discrepancy: FieldElement,
        // position + 1, so that the initial register sits at "position -1"
        shift_base: usize,
    }
    let mut lambda = Poly::one(ctx);
    let mut length = 0usize;
    let mut aux: Vec<Aux> = sequences
        .iter()
        .map(|_| Aux {
            poly: Poly::one(ctx),
            length: 0,
            discrepancy: ctx.one(),
            shift_base: 0,
        })
        .collect();
    for k in 0..len {
        for (j, seq) in sequences.iter().enumerate() {
            let d = (0..=length.min(k)).fold(ctx.zero(), |acc, i| {
                ctx.add(acc, ctx.mul(lambda.coeff(ctx, i), seq[k - i]))
            });
            if d.is_zero() {
                continue;
            }
            let a = &aux[j];
            let shift = k + 1 - a.shift_base;
            let factor = ctx.div(d, a.discrepancy);
            let correction = Poly::monomial(ctx, factor, shift).mul(&a.poly, ctx);
            let next = lambda.sub(&correction, ctx);
            let next_length = length.max(a.length + shift);
            if next_length > length {
                aux[j] = Aux {
                    poly: lambda,
                    length,
                    discrepancy: d,
                    shift_base: k + 1,
                };
                length = next_length;
            }
            lambda = next;
        }
    }
    (lambda, length)
}

/// Dense reference: for `L = 0, 1, ...` solve the stacked system for
/// `Λ_1..Λ_L` and return the first consistent one (free unknowns zero) with
/// its length and the rank of the system.
pub fn dense_locator(
    sequences: &[Vec<FieldElement>],
    max_len: usize,
    ctx: &FieldContext,
) -> Option<(Poly, usize, usize)> {
    let len = sequences.first().map_or(0, |s| s.len());
    for l in 0..=max_len.min(len) {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for seq in sequences {
            for k in l..len {
                rows.push((1..=l).map(|i| seq[k - i]).collect::<Vec<_>>());
                rhs.push(ctx.neg(seq[k]));
            }
        }
        if l == 0 {
            if rhs.iter().all(|x| x.is_zero()) {
                return Some((Poly::one(ctx), 0, 0));
            }
            continue;
        }
        if rows.is_empty() {
            return Some((Poly::one(ctx), l, 0));
        }
        if let Some(x) = linalg::solve(ctx, &rows, &rhs) {
            let rank = linalg::rank(ctx, &rows);
            let mut coeffs = vec![ctx.one()];
            coeffs.extend(x);
            return Some((Poly::new(coeffs), l, rank));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeStatus {
    Corrected,
    Failure,
}

/// Record of one trial error count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub t: usize,
    pub rank: usize,
    /// `None` on success, otherwise why the trial was rejected.
    pub rejection: Option<String>,
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    pub positions: Vec<usize>,
    /// Error values as GF(q) indices, aligned with `positions`.
    pub values: Vec<u64>,
    /// The corrected word (GF(q) indices, length `n_a`), on success.
    pub corrected: Option<Vec<u64>>,
    /// Syndrome-matrix rank at the accepted `t` (or the last trial).
    pub rank: usize,
    pub trials: Vec<Trial>,
    pub failure: Option<DecodeError>,
}

/// Error positions, error values and the corrected word.
type Correction = (Vec<usize>, Vec<FieldElement>, Vec<u64>);

/// Everything fixed by the code pair and certificate.
#[derive(Clone, Debug)]
pub struct Decoder {
    a: CyclicCode,
    b: CyclicCode,
    cert: BoundCertificate,
    field: Arc<FieldContext>,
    view_a: CodeView,
    view_b: CodeView,
    word_b: Poly,
    support: Vec<usize>,
    tau: usize,
}

impl Decoder {
    /// Uses the minimum-weight codeword of `B` as `b(X)`.
    pub fn new(a: &CyclicCode, b: &CyclicCode, cert: &BoundCertificate) -> Result<Self, DecodeError> {
        let word = distance::min_weight_codeword(b)?;
        Self::with_associated_word(a, b, cert, &word)
    }

    pub fn with_associated_word(
        a: &CyclicCode,
        b: &CyclicCode,
        cert: &BoundCertificate,
        word_b: &Poly,
    ) -> Result<Self, DecodeError> {
        if cert.variant != Variant::Gen1 {
            return Err(DecodeError::WrongVariant);
        }
        if let Some(reason) = verify_certificate(cert, a, Some(b)).reason() {
            return Err(BoundError::Invariant(reason.to_string()).into());
        }
        if !b.contains(word_b) || word_b.weight() as u64 != cert.d_b {
            return Err(DecodeError::BadAssociatedWord {
                expected: cert.d_b as usize,
            });
        }
        let field = product::joint_field(a, b)?;
        let view_a = a.view_in(&field)?;
        let view_b = b.view_in(&field)?;
        let support = word_b
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(z, _)| z)
            .collect();
        Ok(Decoder {
            a: a.clone(),
            b: b.clone(),
            cert: cert.normalized(),
            tau: decoding_radius(cert)?,
            field,
            view_a,
            view_b,
            word_b: word_b.clone(),
            support,
        })
    }

    pub fn radius(&self) -> usize {
        self.tau
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    pub fn certificate(&self) -> &BoundCertificate {
        &self.cert
    }

    pub fn code(&self) -> &CyclicCode {
        &self.a
    }

    pub fn associated_code(&self) -> &CyclicCode {
        &self.b
    }

    pub fn associated_word(&self) -> &Poly {
        &self.word_b
    }

    pub fn view_a(&self) -> &CodeView {
        &self.view_a
    }

    pub fn view_b(&self) -> &CodeView {
        &self.view_b
    }

    /// `S^{(j)}_i` for a word over GF(q) of length `n_a`.
    pub fn syndromes(&self, r: &Poly) -> SyndromeSet {
        let k = &self.field;
        let c = &self.cert;
        SyndromeSet {
            sequences: (0..=c.nu)
                .map(|j| {
                    (0..c.delta - 1)
                        .map(|i| {
                            let (e1, e2) = c.exponents(i, j);
                            k.mul(self.view_a.eval(r, e1), self.view_b.eval(&self.word_b, e2))
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn check_trial(&self, t: usize) -> Result<usize, DecodeError> {
        let l = self.cert.d_b as usize * t;
        if l + 2 > self.cert.delta as usize {
            return Err(DecodeError::TrialTooLarge { t });
        }
        Ok(l)
    }

    /// Shortest common register of length at most `d_b t`, by synthesis.
    pub fn solve_key_equation(&self, s: &SyndromeSet, t: usize) -> Result<Poly, DecodeError> {
        let max_len = self.check_trial(t)?;
        let (lambda, len) = synthesize(&s.sequences, &self.field);
        if len > max_len {
            return Err(DecodeError::NoLocator { max_len });
        }
        Ok(lambda)
    }

    /// Rank of the stacked `(nu+1)(delta-1-d_b t) x d_b t` Hankel matrix.
    pub fn syndrome_matrix_rank(&self, s: &SyndromeSet, t: usize) -> Result<usize, DecodeError> {
        let l = self.check_trial(t)?;
        if l == 0 {
            return Ok(0);
        }
        let rows_per = self.cert.delta as usize - 1 - l;
        let rows: Vec<Vec<FieldElement>> = s
            .sequences
            .iter()
            .flat_map(|seq| (0..rows_per).map(move |r| seq[r..r + l].to_vec()))
            .collect();
        Ok(linalg::rank(&self.field, &rows))
    }

    /// `1 / (alpha^{p m1} beta^{z m2})`, the root of the factor for
    /// position `p` and support index `z`.
    fn locator_root(&self, p: usize, z: usize) -> FieldElement {
        let k = &self.field;
        let x = k.mul(
            self.view_a.root_power(p as i64 * self.cert.m1),
            self.view_b.root_power(z as i64 * self.cert.m2),
        );
        k.inv(x)
    }

    /// Positions `p` at which all `d_b` factors of `Λ` are present.
    pub fn find_error_positions(&self, lambda: &Poly) -> Result<Vec<usize>, DecodeError> {
        let k = &self.field;
        let positions: Vec<usize> = (0..self.a.length() as usize)
            .filter(|&p| {
                self.support
                    .iter()
                    .all(|&z| lambda.eval(self.locator_root(p, z), k).is_zero())
            })
            .collect();
        let degree = lambda.degree().unwrap_or(0);
        if positions.len() * self.support.len() != degree {
            return Err(DecodeError::RootMismatch {
                degree,
                found: positions.len(),
            });
        }
        Ok(positions)
    }

    /// Error values from the linear system
    /// `S^{(j)}_i = sum_p e_p alpha^{p e1(i,j)} b(beta^{e2(i,j)})`; they must
    /// be nonzero elements of GF(q).
    pub fn recover_error_values(&self, positions: &[usize], s: &SyndromeSet) -> Result<Vec<FieldElement>, DecodeError> {
        let k = &self.field;
        let c = &self.cert;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..=c.nu {
            for i in 0..c.delta - 1 {
                let (e1, e2) = c.exponents(i, j);
                let bval = self.view_b.eval(&self.word_b, e2);
                rows.push(
                    positions
                        .iter()
                        .map(|&p| k.mul(self.view_a.root_power(p as i64 * e1), bval))
                        .collect::<Vec<_>>(),
                );
                rhs.push(s.sequences[j as usize][i as usize]);
            }
        }
        let x = linalg::solve(k, &rows, &rhs).ok_or(DecodeError::Inconsistent)?;
        if linalg::rank(k, &rows) < positions.len() {
            return Err(DecodeError::Inconsistent);
        }
        let emb = self.view_a.symbols();
        x.into_iter()
            .map(|v| match emb.pull_back(v) {
                Some(e) if !e.is_zero() => Ok(e),
                _ => Err(DecodeError::ValueOutsideBaseField),
            })
            .collect()
    }

    fn attempt(&self, r: &Poly, s: &SyndromeSet, t: usize) -> Result<Correction, DecodeError> {
        let lambda = self.solve_key_equation(s, t)?;
        let degree = lambda.degree().unwrap_or(0);
        if degree != self.cert.d_b as usize * t {
            return Err(DecodeError::NoLocator {
                max_len: self.cert.d_b as usize * t,
            });
        }
        let positions = self.find_error_positions(&lambda)?;
        let values = self.recover_error_values(&positions, s)?;
        let sym = self.a.symbol_field();
        let n = self.a.length() as usize;
        let mut word = r.to_indices(n);
        for (&p, &v) in positions.iter().zip(&values) {
            let cur = sym.element(word[p]).expect("received symbols are valid");
            word[p] = sym.sub(cur, v).index();
        }
        let corrected = Poly::from_indices(sym, &word).expect("symbols stay in GF(q)");
        if !self.a.contains(&corrected) || !self.syndromes(&corrected).is_zero() {
            return Err(DecodeError::Inconsistent);
        }
        Ok((positions, values, word))
    }

    /// Tries `t = 0, 1, ..., tau` and returns the first trial whose result
    /// is a codeword.
    pub fn decode(&self, r: &Poly) -> DecodeResult {
        let s = self.syndromes(r);
        let mut trials = Vec::new();
        let mut last_err = None;
        for t in 0..=self.tau {
            let rank = match self.syndrome_matrix_rank(&s, t) {
                Ok(rank) => rank,
                Err(e) => {
                    last_err = Some(e);
                    break;
                }
            };
            match self.attempt(r, &s, t) {
                Ok((positions, values, word)) => {
                    trials.push(Trial {
                        t,
                        rank,
                        rejection: None,
                    });
                    return DecodeResult {
                        status: DecodeStatus::Corrected,
                        positions,
                        values: values.iter().map(|v| v.index()).collect(),
                        corrected: Some(word),
                        rank,
                        trials,
                        failure: None,
                    };
                }
                Err(e) => {
                    trials.push(Trial {
                        t,
                        rank,
                        rejection: Some(e.to_string()),
                    });
                    last_err = Some(e);
                }
            }
        }
        DecodeResult {
            status: DecodeStatus::Failure,
            positions: Vec::new(),
            values: Vec::new(),
            corrected: None,
            rank: trials.last().map_or(0, |t| t.rank),
            trials,
            failure: last_err,
        }
    }

    /// Expected locator for a known error support: the product of
    /// `(1 - X alpha^{p m1} beta^{z m2})` over `p` and the support of `b`.
    pub fn locator_for(&self, positions: &[usize]) -> Poly {
        let k = &self.field;
        positions.iter().fold(Poly::one(k), |acc, &p| {
            self.support.iter().fold(acc, |acc, &z| {
                let x = k.inv(self.locator_root(p, z));
                acc.mul(&Poly::new(vec![k.one(), k.neg(x)]), k)
            })
        })
    }
}

/// Integer form of the radius condition used in the rank argument:
/// `t <= (delta + nu - 1) / (2 d_b) < (delta - 1) / d_b`.
pub fn radius_is_consistent(cert: &BoundCertificate) -> bool {
    let Ok(tau) = decoding_radius(cert) else {
        return false;
    };
    let tau = tau as u64;
    2 * cert.d_b * tau < cert.delta + cert.nu && cert.d_b * tau < cert.delta - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::DefiningSet;

    fn code(q: u64, n: u64, d: &[u64]) -> CyclicCode {
        CyclicCode::from_defining_set(q, n, &DefiningSet::new(n, d.iter().copied()).unwrap()).unwrap()
    }

    fn example() -> Decoder {
        let a = code(2, 17, &[1, 2, 4, 8, 9, 13, 15, 16]);
        let b = code(2, 3, &[0]);
        let cert = BoundCertificate {
            variant: Variant::Gen1,
            n_a: 17,
            n_b: 3,
            d_b: 2,
            f1: -4,
            f2: -1,
            m1: 1,
            m2: 1,
            delta: 10,
            nu: 0,
            value: 5,
        };
        Decoder::new(&a, &b, &cert).unwrap()
    }

    fn cert(delta: u64, nu: u64, d_b: u64) -> BoundCertificate {
        BoundCertificate {
            variant: Variant::Gen1,
            n_a: 17,
            n_b: 3,
            d_b,
            f1: 0,
            f2: 0,
            m1: 1,
            m2: 1,
            delta,
            nu,
            value: Variant::Gen1.value(delta, nu, d_b),
        }
    }

    #[test]
    fn radius_examples() {
        assert_eq!(decoding_radius(&cert(10, 0, 2)).unwrap(), 2);
        assert_eq!(decoding_radius(&cert(2, 0, 2)).unwrap(), 0);
        assert_eq!(decoding_radius(&cert(10, 3, 2)).unwrap(), 3);
        let mut ht = cert(10, 0, 1);
        ht.variant = Variant::Ht;
        assert_eq!(decoding_radius(&ht), Err(DecodeError::WrongVariant));
    }

    #[test]
    fn associated_word_is_one_plus_x() {
        let d = example();
        assert_eq!(d.associated_word().to_indices(3), vec![1, 1, 0]);
        assert_eq!(d.radius(), 2);
    }

    #[test]
    fn codeword_has_zero_syndromes() {
        let d = example();
        let c = d.code().encode(&[1, 0, 1, 1, 0, 0, 1, 0, 1]).unwrap();
        assert!(d.syndromes(&c).is_zero());
        let res = d.decode(&c);
        assert_eq!(res.status, DecodeStatus::Corrected);
        assert!(res.positions.is_empty());
        assert_eq!(res.corrected.unwrap(), c.to_indices(17));
    }

    #[test]
    fn planted_double_error() {
        let d = example();
        let f = d.code().symbol_field().clone();
        let mut e = vec![0u64; 17];
        e[3] = 1;
        e[11] = 1;
        let r = Poly::from_indices(&f, &e).unwrap();
        let s = d.syndromes(&r);
        let lambda = d.solve_key_equation(&s, 2).unwrap();
        assert_eq!(lambda, d.locator_for(&[3, 11]));
        assert_eq!(d.syndrome_matrix_rank(&s, 2).unwrap(), 4);
        assert_eq!(d.find_error_positions(&lambda).unwrap(), vec![3, 11]);
        let res = d.decode(&r);
        assert_eq!(res.status, DecodeStatus::Corrected);
        assert_eq!(res.positions, vec![3, 11]);
        assert_eq!(res.corrected.unwrap(), vec![0; 17]);
    }

    #[test]
    fn synthesis_length_is_minimal_on_random_sequences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (5, 1)] {
            let f = crate::gf::make_field(p, m).unwrap();
            for _ in 0..3000 {
                let count = rng.gen_range(1..=4);
                let len = rng.gen_range(1..=9);
                let seqs: Vec<Vec<FieldElement>> = (0..count)
                    .map(|_| {
                        (0..len)
                            .map(|_| f.element(rng.gen_range(0..f.size())).unwrap())
                            .collect()
                    })
                    .collect();
                let (syn, l) = synthesize(&seqs, &f);
                let (_, l2, _) = dense_locator(&seqs, len, &f).unwrap();
                assert_eq!(l, l2, "{seqs:?}");
                assert_eq!(syn.coeff(&f, 0), f.one());
                assert!(syn.degree().unwrap() <= l);
                for s in &seqs {
                    for k in l..len {
                        let acc = (0..=l).fold(f.zero(), |a, i| f.add(a, f.mul(syn.coeff(&f, i), s[k - i])));
                        assert!(acc.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn synthesis_matches_dense_on_small_cases() {
        let d = example();
        let f = d.code().symbol_field().clone();
        for p in 0..17 {
            for q in p + 1..17 {
                let mut e = vec![0u64; 17];
                e[p] = 1;
                e[q] = 1;
                let s = d.syndromes(&Poly::from_indices(&f, &e).unwrap());
                let (syn, l) = synthesize(&s.sequences, d.field());
                let (dense, l2, _) = dense_locator(&s.sequences, 8, d.field()).unwrap();
                assert_eq!((syn, l), (dense, l2));
            }
        }
    }
}
