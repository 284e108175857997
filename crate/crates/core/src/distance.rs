//! Exact minimum distance by exhaustive search.
//!
//! Two routes, whichever is cheaper for the code at hand:
//!
//! * enumerate all `q^k` messages and encode them (low-rate codes);
//! * enumerate supports of increasing weight `w` and test whether some word
//!   on that support lies in the code, i.e. whether the remainders
//!   `X^i mod g` of the support positions are linearly dependent with all
//!   coefficients nonzero (high-rate codes, where `d` is small).
//!
//! Both are bounded by a candidate budget. Binary codes of length up to 128
//! use bitmask words.
//!
//! Among minimum-weight codewords the reported one is the smallest when the
//! word is read as a base-q integer with `c_0` least significant.

use std::cmp::Ordering;

use crate::arith;
use crate::cyclic::CyclicCode;
use crate::error::CodeError;
use crate::gf::{FieldContext, FieldElement};
use crate::poly::Poly;

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Copy, Debug)]
pub struct DistanceOracle {
    budget: u64,
    lower_bound: Option<u64>,
}

impl Default for DistanceOracle {
    fn default() -> Self {
        DistanceOracle {
            budget: DEFAULT_BUDGET,
            lower_bound: None,
        }
    }
}

/// Minimum distance with the default budget.
pub fn min_distance_bruteforce(code: &CyclicCode) -> Result<u64, CodeError> {
    DistanceOracle::default().min_distance(code)
}

/// A minimum-weight codeword with the default budget.
pub fn min_weight_codeword(code: &CyclicCode) -> Result<Poly, CodeError> {
    DistanceOracle::default().min_weight_codeword(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Messages,
    Supports,
}

impl DistanceOracle {
    pub fn new(budget: u64) -> Self {
        DistanceOracle {
            budget,
            lower_bound: None,
        }
    }

    /// Stop the message enumeration as soon as a word of this weight shows
    /// up. Only affects [`Self::min_distance`].
    pub fn with_lower_bound(mut self, bound: u64) -> Self {
        self.lower_bound = Some(bound);
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn route(&self, code: &CyclicCode) -> Result<Route, CodeError> {
        let q = code.q() as u128;
        let n = code.length();
        let k = code.dimension();
        let messages = (q).checked_pow(k as u32).unwrap_or(u128::MAX);
        let supports: u128 = (1..=n - k + 1)
            .map(|w| arith::binomial(n, w).saturating_mul((q - 1).saturating_pow(w as u32 - 1)))
            .fold(0u128, |a, b| a.saturating_add(b));
        // the support estimate runs up to the Singleton bound, so it is only
        // a ceiling; the real spend stops at the true distance and is capped
        // by the budget as it goes
        if messages <= self.budget as u128 && messages <= supports {
            Ok(Route::Messages)
        } else {
            Ok(Route::Supports)
        }
    }

    pub fn min_distance(&self, code: &CyclicCode) -> Result<u64, CodeError> {
        self.search(code, false).map(|(d, _)| d)
    }

    pub fn min_weight_codeword(&self, code: &CyclicCode) -> Result<Poly, CodeError> {
        let (_, word) = self.search(code, true)?;
        Poly::from_indices(code.symbol_field(), &word).map_err(CodeError::from)
    }

    fn search(&self, code: &CyclicCode, want_word: bool) -> Result<(u64, Vec<u64>), CodeError> {
        let route = self.route(code)?;
        let stop_at = if want_word { None } else { self.lower_bound };
        if code.q() == 2 && code.length() <= 128 {
            let b = Binary::new(code);
            let (d, mask) = match route {
                Route::Messages => b.messages(stop_at),
                Route::Supports => b.supports(self.budget)?,
            };
            let word = (0..code.length()).map(|i| (mask >> i & 1) as u64).collect();
            return Ok((d, word));
        }
        let g = General::new(code);
        let (d, word) = match route {
            Route::Messages => g.messages(stop_at),
            Route::Supports => g.supports(self.budget)?,
        };
        Ok((d, word.iter().map(|e| e.index()).collect()))
    }
}

struct Binary {
    n: usize,
    k: usize,
    generator: u128,
    degree: usize,
}

impl Binary {
    fn new(code: &CyclicCode) -> Self {
        let g = code.generator();
        let generator = g
            .coeffs()
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, c)| acc | ((c.index() as u128) << i));
        Binary {
            n: code.length() as usize,
            k: code.dimension() as usize,
            generator,
            degree: g.degree().unwrap_or(0),
        }
    }

    fn better(w: u32, v: u128, best: &mut (u32, u128)) {
        if w < best.0 || (w == best.0 && v < best.1) {
            *best = (w, v);
        }
    }

    /// Gray-code walk over all nonzero messages.
    fn messages(&self, stop_at: Option<u64>) -> (u64, u128) {
        let rows: Vec<u128> = (0..self.k).map(|i| self.generator << i).collect();
        let mut best = (u32::MAX, u128::MAX);
        let mut word = 0u128;
        for idx in 1u128..(1u128 << self.k) {
            word ^= rows[idx.trailing_zeros() as usize];
            Self::better(word.count_ones(), word, &mut best);
            if stop_at.is_some_and(|s| best.0 as u64 <= s) {
                break;
            }
        }
        (best.0 as u64, best.1)
    }

    fn supports(&self, budget: u64) -> Result<(u64, u128), CodeError> {
        // remainders X^i mod g as bitmasks of width deg g
        let mut synd = Vec::with_capacity(self.n);
        let mut r = 1u128;
        for _ in 0..self.n {
            let mut x = r;
            if x >> self.degree & 1 == 1 {
                x ^= self.generator;
            }
            synd.push(x);
            r = x << 1;
        }
        let mut spent = 0u64;
        for w in 1..=self.n {
            let mut best: Option<u128> = None;
            self.dfs(&synd, 0, w, 0, 0, &mut best, &mut spent, budget)?;
            if let Some(v) = best {
                return Ok((w as u64, v));
            }
        }
        unreachable!("the all-zero remainder sum exists for the generator itself")
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        synd: &[u128],
        start: usize,
        left: usize,
        acc: u128,
        word: u128,
        best: &mut Option<u128>,
        spent: &mut u64,
        budget: u64,
    ) -> Result<(), CodeError> {
        if left == 0 {
            *spent += 1;
            if *spent > budget {
                return Err(CodeError::BudgetExceeded {
                    needed: *spent as u128,
                    budget,
                });
            }
            if acc == 0 && best.is_none_or(|b| word < b) {
                *best = Some(word);
            }
            return Ok(());
        }
        for i in start..=self.n - left {
            self.dfs(synd, i + 1, left - 1, acc ^ synd[i], word | 1 << i, best, spent, budget)?;
        }
        Ok(())
    }
}

struct General<'a> {
    ctx: &'a FieldContext,
    n: usize,
    k: usize,
    generator: Vec<FieldElement>,
}

/// Compares two words as base-q integers, most significant symbol last.
fn cmp_value(a: &[FieldElement], b: &[FieldElement]) -> Ordering {
    a.iter().rev().map(|x| x.index()).cmp(b.iter().rev().map(|x| x.index()))
}

impl<'a> General<'a> {
    fn new(code: &'a CyclicCode) -> Self {
        let ctx = code.symbol_field().as_ref();
        General {
            ctx,
            n: code.length() as usize,
            k: code.dimension() as usize,
            generator: code.generator().coeffs().to_vec(),
        }
    }

    fn weight(w: &[FieldElement]) -> u64 {
        w.iter().filter(|x| !x.is_zero()).count() as u64
    }

    fn consider(word: &[FieldElement], best: &mut Option<(u64, Vec<FieldElement>)>) {
        let w = Self::weight(word);
        if w == 0 {
            return;
        }
        let replace = match best {
            None => true,
            Some((bw, bv)) => w < *bw || (w == *bw && cmp_value(word, bv) == Ordering::Less),
        };
        if replace {
            *best = Some((w, word.to_vec()));
        }
    }

    /// Odometer over messages; moving digit `i` from `a` to `b` adds
    /// `(b - a) X^i g(X)` to the running codeword.
    fn messages(&self, stop_at: Option<u64>) -> (u64, Vec<FieldElement>) {
        let ctx = self.ctx;
        let q = ctx.size();
        let mut digits = vec![0u64; self.k];
        let mut word = vec![ctx.zero(); self.n];
        let mut best = None;
        let add_row = |word: &mut [FieldElement], i: usize, c: FieldElement| {
            for (j, &g) in self.generator.iter().enumerate() {
                word[i + j] = ctx.add(word[i + j], ctx.mul(c, g));
            }
        };
        'outer: loop {
            let mut i = 0;
            loop {
                if i == self.k {
                    break 'outer;
                }
                let from = ctx.element(digits[i]).unwrap();
                if digits[i] + 1 < q {
                    digits[i] += 1;
                    let to = ctx.element(digits[i]).unwrap();
                    add_row(&mut word, i, ctx.sub(to, from));
                    break;
                }
                digits[i] = 0;
                add_row(&mut word, i, ctx.neg(from));
                i += 1;
            }
            Self::consider(&word, &mut best);
            if let (Some(s), Some((w, _))) = (stop_at, &best) {
                if *w <= s {
                    break;
                }
            }
        }
        best.expect("code has a nonzero codeword")
    }

    fn supports(&self, budget: u64) -> Result<(u64, Vec<FieldElement>), CodeError> {
        let ctx = self.ctx;
        let g = Poly::new(self.generator.clone());
        let r = g.degree().unwrap_or(0);
        let synd: Vec<Vec<FieldElement>> = (0..self.n)
            .map(|i| {
                let rem = Poly::monomial(ctx, ctx.one(), i).rem(&g, ctx).unwrap();
                (0..r).map(|j| rem.coeff(ctx, j)).collect()
            })
            .collect();
        let mut spent = 0u64;
        for w in 1..=self.n {
            let mut best = None;
            let mut chosen = Vec::with_capacity(w);
            self.dfs(
                &synd,
                0,
                w,
                &mut chosen,
                &vec![ctx.zero(); r],
                &mut best,
                &mut spent,
                budget,
            )?;
            if let Some(b) = best {
                return Ok(b);
            }
        }
        unreachable!("the generator itself is a codeword")
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        synd: &[Vec<FieldElement>],
        start: usize,
        left: usize,
        chosen: &mut Vec<(usize, FieldElement)>,
        acc: &[FieldElement],
        best: &mut Option<(u64, Vec<FieldElement>)>,
        spent: &mut u64,
        budget: u64,
    ) -> Result<(), CodeError> {
        let ctx = self.ctx;
        if left == 0 {
            *spent += 1;
            if *spent > budget {
                return Err(CodeError::BudgetExceeded {
                    needed: *spent as u128,
                    budget,
                });
            }
            if acc.iter().all(|x| x.is_zero()) {
                let mut word = vec![ctx.zero(); self.n];
                for &(i, c) in chosen.iter() {
                    word[i] = c;
                }
                // every scalar multiple has the same support
                for s in ctx.elements().skip(1) {
                    let scaled: Vec<FieldElement> = word.iter().map(|&x| ctx.mul(x, s)).collect();
                    Self::consider(&scaled, best);
                }
            }
            return Ok(());
        }
        for i in start..=self.n - left {
            // first coefficient normalised to 1
            let coeffs: Vec<FieldElement> = if chosen.is_empty() {
                vec![ctx.one()]
            } else {
                ctx.elements().skip(1).collect()
            };
            for c in coeffs {
                let next: Vec<FieldElement> = acc
                    .iter()
                    .zip(&synd[i])
                    .map(|(&a, &s)| ctx.add(a, ctx.mul(c, s)))
                    .collect();
                chosen.push((i, c));
                self.dfs(synd, i + 1, left - 1, chosen, &next, best, spent, budget)?;
                chosen.pop();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::DefiningSet;

    fn code(q: u64, n: u64, d: &[u64]) -> CyclicCode {
        CyclicCode::from_defining_set(q, n, &DefiningSet::new(n, d.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn known_distances() {
        assert_eq!(min_distance_bruteforce(&code(2, 3, &[0])).unwrap(), 2);
        assert_eq!(min_distance_bruteforce(&code(2, 7, &[1, 2, 4])).unwrap(), 3);
        assert_eq!(
            min_distance_bruteforce(&code(2, 17, &[1, 2, 4, 8, 9, 13, 15, 16])).unwrap(),
            5
        );
        // binary Golay code
        let golay = code(2, 23, &[1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18]);
        assert_eq!(min_distance_bruteforce(&golay).unwrap(), 7);
        assert_eq!(min_distance_bruteforce(&code(2, 7, &[])).unwrap(), 1);
    }

    #[test]
    fn min_weight_words() {
        let spc = code(2, 3, &[0]);
        assert_eq!(min_weight_codeword(&spc).unwrap().to_indices(3), vec![1, 1, 0]);
        let rep = code(2, 5, &[1, 2, 3, 4]);
        assert_eq!(min_weight_codeword(&rep).unwrap().to_indices(5), vec![1; 5]);
        let rep3 = code(3, 4, &[1, 2, 3]);
        assert_eq!(min_weight_codeword(&rep3).unwrap().to_indices(4), vec![1; 4]);
        let ham = code(2, 7, &[1, 2, 4]);
        let w = min_weight_codeword(&ham).unwrap();
        assert_eq!(w.weight(), 3);
        assert!(ham.contains(&w));
    }

    #[test]
    fn both_routes_agree() {
        for c in crate::cyclic::all_cyclic_codes(2, 15).unwrap() {
            let b = Binary::new(&c);
            let (d1, w1) = b.messages(None);
            let (d2, w2) = b.supports(1 << 30).unwrap();
            assert_eq!((d1, w1), (d2, w2), "{:?}", c.defining_set());
            let g = General::new(&c);
            let (d3, w3) = g.messages(None);
            let (d4, w4) = g.supports(1 << 30).unwrap();
            assert_eq!(d3, d1);
            assert_eq!(d4, d1);
            assert_eq!(w3, w4);
            assert_eq!(
                w3.iter()
                    .map(|x| x.index() as u128)
                    .enumerate()
                    .fold(0, |a, (i, x)| a | x << i),
                w1
            );
        }
        for c in crate::cyclic::all_cyclic_codes(3, 8).unwrap() {
            let g = General::new(&c);
            let (d3, w3) = g.messages(None);
            let (d4, w4) = g.supports(1 << 30).unwrap();
            assert_eq!((d3, &w3), (d4, &w4), "{:?}", c.defining_set());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = code(2, 31, &[0]);
        assert_eq!(DistanceOracle::default().min_distance(&c).unwrap(), 2);
        let err = DistanceOracle::new(10).min_distance(&code(2, 23, &[1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18]));
        assert!(matches!(err, Err(CodeError::BudgetExceeded { .. })));
    }

    #[test]
    fn lower_bound_short_circuits() {
        let a = code(2, 17, &[1, 2, 4, 8, 9, 13, 15, 16]);
        assert_eq!(
            DistanceOracle::default().with_lower_bound(5).min_distance(&a).unwrap(),
            5
        );
    }
}
