//! Cyclic codes described by defining sets.
//!
//! A q-ary cyclic code of length `n` (with `gcd(n, q) = 1`) is fixed by its
//! defining set `D`, the exponents `i` with `g(alpha^i) = 0` for an element
//! `alpha` of order `n` in the splitting field GF(q^s). `D` must be a union of
//! q-cyclotomic cosets modulo `n`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{CodeError, FieldError};
use crate::gf::{make_field, splitting_degree, Embedding, FieldContext, FieldElement};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub representative: u64,
    /// Orbit order: `r, rq, rq^2, ...`.
    pub members: Vec<u64>,
}

/// Partition of `Z_n` into orbits under multiplication by `q`, ordered by
/// representative (the smallest member).
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Coset>, CodeError> {
    if n == 0 {
        return Err(CodeError::ZeroLength);
    }
    if arith::gcd(n, q) != 1 {
        return Err(FieldError::NotCoprime { n, q }.into());
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for r in 0..n {
        if seen[r as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut x = r;
        while !seen[x as usize] {
            seen[x as usize] = true;
            members.push(x);
            x = ((x as u128 * q as u128) % n as u128) as u64;
        }
        out.push(Coset {
            representative: r,
            members,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `{(i * z) mod n}`
    Multiply,
    /// `{(i + z) mod n}`
    Shift,
}

/// A set of residues modulo `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    n: u64,
    residues: BTreeSet<u64>,
}

impl fmt::Debug for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.residues, self.n)
    }
}

impl DefiningSet {
    pub fn new(n: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&r) = residues.iter().find(|&&r| r >= n) {
            return Err(CodeError::ResidueOutOfRange { residue: r, n });
        }
        Ok(DefiningSet { n, residues })
    }

    /// Accepts arbitrary integers and reduces them modulo `n`.
    pub fn from_signed(n: u64, values: impl IntoIterator<Item = i64>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        Ok(DefiningSet {
            n,
            residues: values.into_iter().map(|v| arith::modulo(v, n)).collect(),
        })
    }

    pub fn empty(n: u64) -> Self {
        DefiningSet {
            n,
            residues: BTreeSet::new(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.residues.len() as u64 == self.n
    }

    pub fn contains(&self, x: u64) -> bool {
        self.residues.contains(&(x % self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.residues.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// Membership bitmap indexed by residue.
    pub fn indicator(&self) -> Vec<bool> {
        let mut v = vec![false; self.n as usize];
        for r in self.iter() {
            v[r as usize] = true;
        }
        v
    }

    pub fn transform(&self, z: i64, mode: Transform) -> DefiningSet {
        let n = self.n;
        let zr = arith::modulo(z, n) as u128;
        let residues = self
            .iter()
            .map(|i| match mode {
                Transform::Multiply => ((i as u128 * zr) % n as u128) as u64,
                Transform::Shift => ((i as u128 + zr) % n as u128) as u64,
            })
            .collect();
        DefiningSet { n, residues }
    }

    /// Same integers `0 <= r < n`, read as residues modulo a larger `n'`.
    pub fn lift(&self, new_n: u64) -> Result<DefiningSet, CodeError> {
        DefiningSet::new(new_n, self.iter())
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        assert_eq!(self.n, other.n, "union of sets with different moduli");
        DefiningSet {
            n: self.n,
            residues: self.residues.union(&other.residues).copied().collect(),
        }
    }

    /// Checks closure under multiplication by `q`, naming the first residue
    /// whose image is missing.
    pub fn check_coset_closed(&self, q: u64) -> Result<(), CodeError> {
        for r in self.iter() {
            let image = ((r as u128 * q as u128) % self.n as u128) as u64;
            if !self.residues.contains(&image) {
                return Err(CodeError::NotCosetClosed {
                    residue: r,
                    q,
                    n: self.n,
                    image,
                });
            }
        }
        Ok(())
    }
}

/// How a code's words are read inside some extension field: the symbol
/// embedding GF(q) -> K and an element `alpha` of order `n` in K for which
/// the generator vanishes exactly on `alpha^D`.
#[derive(Clone, Debug)]
pub struct CodeView {
    field: Arc<FieldContext>,
    symbols: Arc<Embedding>,
    alpha: FieldElement,
    n: u64,
}

impl CodeView {
    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn symbols(&self) -> &Embedding {
        &self.symbols
    }

    /// `alpha^e` for any integer `e`.
    pub fn root_power(&self, e: i64) -> FieldElement {
        self.field.pow(self.alpha, arith::modulo(e, self.n))
    }

    /// `c(alpha^e)` for a word over GF(q).
    pub fn eval(&self, word: &Poly, e: i64) -> FieldElement {
        let x = self.root_power(e);
        let k = &self.field;
        word.coeffs()
            .iter()
            .rev()
            .fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), self.symbols.map(c)))
    }
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    q: u64,
    n: u64,
    defining_set: DefiningSet,
    generator: Poly,
    symbols: Arc<FieldContext>,
    splitting_degree: u64,
    view: CodeView,
}

impl CyclicCode {
    /// Builds the code with defining set `d`. An empty set gives the full
    /// space (`g = 1`); the full set is rejected since it describes the zero
    /// code.
    pub fn from_defining_set(q: u64, n: u64, d: &DefiningSet) -> Result<Self, CodeError> {
        let (p, e) = arith::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        if d.modulus() != n {
            return Err(CodeError::ResidueOutOfRange {
                residue: d.modulus(),
                n,
            });
        }
        let s = splitting_degree(n, q)?;
        d.check_coset_closed(q)?;
        if d.is_full() {
            return Err(CodeError::ZeroCode(n));
        }
        let symbols = make_field(p, e)?;
        let big_degree = u32::try_from(e as u64 * s).map_err(|_| FieldError::TooLarge {
            p,
            m: u32::MAX,
            ceiling: crate::gf::DEFAULT_SIZE_CEILING,
        })?;
        let splitting = make_field(p, big_degree)?;
        let embedding = Arc::new(Embedding::new(&symbols, &splitting)?);
        let alpha = splitting.element_of_order(n)?;

        let k = &splitting;
        let mut g_big = Poly::one(k);
        for i in d.iter() {
            let root = k.pow(alpha, i);
            g_big = g_big.mul(&Poly::new(vec![k.neg(root), k.one()]), k);
        }
        let generator = Poly::new(
            g_big
                .coeffs()
                .iter()
                .map(|&c| embedding.pull_back(c).ok_or(CodeError::NotOverBaseField(q)))
                .collect::<Result<Vec<_>, _>>()?,
        );
        Ok(CyclicCode {
            q,
            n,
            defining_set: d.clone(),
            generator,
            symbols,
            splitting_degree: s,
            view: CodeView {
                field: splitting,
                symbols: embedding,
                alpha,
                n,
            },
        })
    }

    /// Builds the code generated by `g` (coefficients as GF(q) indices,
    /// constant first). `g` is made monic and must divide `X^n - 1`.
    pub fn from_generator(q: u64, n: u64, coeffs: &[u64]) -> Result<Self, CodeError> {
        let (p, e) = arith::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        let symbols = make_field(p, e)?;
        let g = Poly::from_indices(&symbols, coeffs)
            .map_err(|_| CodeError::BadSymbol {
                symbol: coeffs.iter().copied().find(|&c| c >= q).unwrap_or(0),
                q,
            })?
            .monic(&symbols);
        if g.is_zero() {
            return Err(CodeError::ZeroGenerator);
        }
        let xn1 = Poly::x_pow_minus_one(&symbols, n as usize);
        if !xn1.rem(&g, &symbols)?.is_zero() {
            return Err(CodeError::NotDivisor(n));
        }
        // Roots of g among the n-th roots of unity.
        let probe = Self::from_defining_set(q, n, &DefiningSet::empty(n))?;
        let view = probe.view();
        let d = DefiningSet::new(n, (0..n).filter(|&i| view.eval(&g, i as i64).is_zero()))?;
        let code = Self::from_defining_set(q, n, &d)?;
        debug_assert_eq!(code.generator, g);
        Ok(code)
    }

    /// Pairs a defining set with a generator computed elsewhere. The view's
    /// `alpha` is chosen so that `g` vanishes on `alpha^D`; an error is
    /// returned when no primitive `n`-th root of unity does.
    pub fn from_parts(q: u64, n: u64, d: &DefiningSet, generator: &Poly) -> Result<Self, CodeError> {
        let base = Self::from_defining_set(q, n, &DefiningSet::empty(n))?;
        if d.modulus() != n {
            return Err(CodeError::ResidueOutOfRange {
                residue: d.modulus(),
                n,
            });
        }
        d.check_coset_closed(q)?;
        if d.is_full() {
            return Err(CodeError::ZeroCode(n));
        }
        let ctx = base.symbols.clone();
        if generator.coeffs().iter().any(|c| !ctx.owns(*c)) {
            return Err(CodeError::NotOverBaseField(q));
        }
        let g = generator.monic(&ctx);
        if g.is_zero() {
            return Err(CodeError::ZeroGenerator);
        }
        if !Poly::x_pow_minus_one(&ctx, n as usize).rem(&g, &ctx)?.is_zero() {
            return Err(CodeError::NotDivisor(n));
        }
        if g.degree() != Some(d.len()) {
            return Err(CodeError::GeneratorMismatch(n));
        }
        let mut code = CyclicCode {
            defining_set: d.clone(),
            generator: g,
            ..base
        };
        code.view = code.view_in(&code.view.field.clone())?;
        Ok(code)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn length(&self) -> u64 {
        self.n
    }

    pub fn dimension(&self) -> u64 {
        self.n - self.defining_set.len() as u64
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn symbol_field(&self) -> &Arc<FieldContext> {
        &self.symbols
    }

    pub fn splitting_degree(&self) -> u64 {
        self.splitting_degree
    }

    /// The code read in its own splitting field GF(q^s).
    pub fn view(&self) -> &CodeView {
        &self.view
    }

    /// The code read in an extension `big` of GF(q) containing `n`-th roots
    /// of unity. `alpha` is the first power `w^u` (u a unit, ascending) of the
    /// field's order-`n` element at which the generator vanishes on the
    /// defining set.
    pub fn view_in(&self, big: &Arc<FieldContext>) -> Result<CodeView, CodeError> {
        let symbols = Arc::new(Embedding::new(&self.symbols, big)?);
        let w = big.element_of_order(self.n)?;
        let g = self.generator.map(|c| symbols.map(c));
        let reps: Vec<u64> = cyclotomic_cosets(self.n, self.q)?
            .into_iter()
            .map(|c| c.representative)
            .filter(|&r| self.defining_set.contains(r))
            .collect();
        let alpha = arith::units(self.n)
            .into_iter()
            .map(|u| big.pow(w, u))
            .find(|&a| reps.iter().all(|&r| g.eval(big.pow(a, r), big).is_zero()))
            .ok_or(CodeError::GeneratorMismatch(self.n))?;
        Ok(CodeView {
            field: big.clone(),
            symbols,
            alpha,
            n: self.n,
        })
    }

    fn check_symbols(&self, symbols: &[u64]) -> Result<Vec<FieldElement>, CodeError> {
        symbols
            .iter()
            .map(|&s| {
                self.symbols
                    .element(s)
                    .map_err(|_| CodeError::BadSymbol { symbol: s, q: self.q })
            })
            .collect()
    }

    /// Non-systematic encoding `m(X) g(X)`; the message has `k` symbols.
    pub fn encode(&self, message: &[u64]) -> Result<Poly, CodeError> {
        let k = self.dimension() as usize;
        if message.len() != k {
            return Err(CodeError::WrongLength {
                expected: k,
                got: message.len(),
            });
        }
        let m = Poly::new(self.check_symbols(message)?);
        Ok(m.mul(&self.generator, &self.symbols))
    }

    /// Parses a word of exactly `n` GF(q) indices.
    pub fn word(&self, symbols: &[u64]) -> Result<Poly, CodeError> {
        if symbols.len() != self.n as usize {
            return Err(CodeError::WrongLength {
                expected: self.n as usize,
                got: symbols.len(),
            });
        }
        Ok(Poly::new(self.check_symbols(symbols)?))
    }

    pub fn contains(&self, word: &Poly) -> bool {
        word.degree().is_none_or(|d| d < self.n as usize)
            && word.rem(&self.generator, &self.symbols).is_ok_and(|r| r.is_zero())
    }

    /// Cyclic shift by one position (multiplication by X mod X^n - 1).
    pub fn shift(&self, word: &Poly) -> Poly {
        let n = self.n as usize;
        let mut v = word.to_indices(n);
        v.rotate_right(1);
        Poly::from_indices(&self.symbols, &v).expect("indices come from the same field")
    }

    /// Short label such as `[17,9] q=2`.
    pub fn label(&self) -> String {
        format!("[{},{}] q={}", self.n, self.dimension(), self.q)
    }
}

/// Every coset-closed defining set except the full one, i.e. every nonzero
/// q-ary cyclic code of length `n`, ordered by coset bitmask.
pub fn all_cyclic_codes(q: u64, n: u64) -> Result<Vec<CyclicCode>, CodeError> {
    let cosets = cyclotomic_cosets(n, q)?;
    let c = cosets.len();
    assert!(c < 31, "too many cyclotomic cosets to enumerate");
    (0u32..(1 << c) - 1)
        .map(|mask| {
            let residues = cosets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, cs)| cs.members.iter().copied());
            CyclicCode::from_defining_set(q, n, &DefiningSet::new(n, residues)?)
        })
        .collect()
}
