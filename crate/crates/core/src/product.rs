//! Cyclic product codes `A ⊗ B` of coprime lengths.
//!
//! A codeword of the product is an `n_a x n_b` array whose columns lie in
//! `A` and whose rows lie in `B`. Reading the array along the diagonal
//! `c_i = M[i mod n_a][i mod n_b]` gives a cyclic code of length
//! `N = n_a n_b`. With Bezout coefficients `a n_a + b n_b = 1` and
//! `gamma = alpha^{n_b} beta^{n_a}` (so `alpha = gamma^{b^2 n_b}` and
//! `beta = gamma^{a^2 n_a}`), its defining set is
//! `{x : x mod n_a ∈ b D_A} ∪ {x : x mod n_b ∈ a D_B}`.

use std::sync::Arc;

use crate::arith;
use crate::cyclic::{CodeView, CyclicCode, DefiningSet, Transform};
use crate::error::{CodeError, FieldError, ProductError};
use crate::gf::{make_field, FieldContext, FieldElement};
use crate::poly::Poly;

/// Bezout pair `(a, b)` with `a n1 + b n2 = 1`.
///
/// `a` is the representative of `n1^{-1} mod n2` in `(-n2/2, n2/2]`, which
/// gives `(17, 3) -> (-1, 6)` and `(5, 3) -> (-1, 2)`. For `n1 = 1` the
/// pair is `(1, 0)`; for `n2 = 1` it is `(0, 1)`.
pub fn bezout(n1: u64, n2: u64) -> Result<(i64, i64), ProductError> {
    if n1 == 0 || n2 == 0 || arith::gcd(n1, n2) != 1 {
        return Err(ProductError::NotCoprime(n1, n2));
    }
    if n1 == 1 {
        return Ok((1, 0));
    }
    if n2 == 1 {
        return Ok((0, 1));
    }
    let inv = arith::mod_inverse(n1 as i64, n2).expect("coprime") as i64;
    let a = if 2 * inv > n2 as i64 { inv - n2 as i64 } else { inv };
    let b = (1 - a as i128 * n1 as i128) / n2 as i128;
    Ok((a, b as i64))
}

/// `(f, m)` with `f + i m ≡ b (f1 + i m1) (mod n1)` and
/// `f + i m ≡ a (f2 + i m2) (mod n2)` for every `i`.
pub fn crt_parameters(f1: i64, f2: i64, m1: i64, m2: i64, n1: u64, n2: u64) -> Result<(u64, u64), ProductError> {
    let (a, b) = bezout(n1, n2)?;
    let big_n = n1 as i128 * n2 as i128;
    let ca = b as i128 * b as i128 * n2 as i128;
    let cb = a as i128 * a as i128 * n1 as i128;
    let reduce = |x: i64, y: i64| {
        let v = (x as i128 % big_n) * ca + (y as i128 % big_n) * cb;
        v.rem_euclid(big_n) as u64
    };
    Ok((reduce(f1, f2), reduce(m1, m2)))
}

/// Defining set of `A ⊗ B` modulo `n1 n2`:
/// `⋃_i (b D_A + i n1) ∪ ⋃_i (a D_B + i n2)`.
pub fn product_defining_set(da: &DefiningSet, db: &DefiningSet) -> Result<DefiningSet, ProductError> {
    let (n1, n2) = (da.modulus(), db.modulus());
    let (a, b) = bezout(n1, n2)?;
    let big_n = n1 * n2;
    let scaled_a = da.lift(big_n)?.transform(b, Transform::Multiply);
    let scaled_b = db.lift(big_n)?.transform(a, Transform::Multiply);
    let mut out = DefiningSet::empty(big_n);
    for i in 0..n2 {
        out = out.union(&scaled_a.transform((i * n1) as i64, Transform::Shift));
    }
    for i in 0..n1 {
        out = out.union(&scaled_b.transform((i * n2) as i64, Transform::Shift));
    }
    Ok(out)
}

/// `gcd(X^N - 1, g1(X^{b n2}) g2(X^{a n1}))` with exponents reduced mod `N`.
pub fn product_generator(g1: &Poly, g2: &Poly, n1: u64, n2: u64, ctx: &FieldContext) -> Result<Poly, ProductError> {
    let (a, b) = bezout(n1, n2)?;
    let big_n = n1 * n2;
    let xn1 = |n: u64| Poly::x_pow_minus_one(ctx, n as usize);
    for (g, n) in [(g1, n1), (g2, n2)] {
        if g.is_zero() {
            return Err(CodeError::ZeroGenerator.into());
        }
        if !xn1(n).rem(g, ctx).map_err(CodeError::from)?.is_zero() {
            return Err(CodeError::NotDivisor(n).into());
        }
    }
    let e1 = arith::modulo(b * n2 as i64, big_n);
    let e2 = arith::modulo(a * n1 as i64, big_n);
    let s1 = g1.substitute_power(e1, big_n as usize, ctx);
    let s2 = g2.substitute_power(e2, big_n as usize, ctx);
    let prod = s1.mul(&s2, ctx).reduce_cyclic(big_n as usize, ctx);
    Ok(Poly::gcd(&xn1(big_n), &prod, ctx))
}

/// Smallest extension of GF(q) holding `n_a`-th and `n_b`-th roots of unity.
pub fn joint_field(a: &CyclicCode, b: &CyclicCode) -> Result<Arc<FieldContext>, CodeError> {
    let sym = a.symbol_field();
    let s = arith::lcm(a.splitting_degree(), b.splitting_degree());
    let degree = sym.degree() as u64 * s;
    let m = u32::try_from(degree).map_err(|_| FieldError::TooLarge {
        p: sym.characteristic(),
        m: u32::MAX,
        ceiling: crate::gf::DEFAULT_SIZE_CEILING,
    })?;
    Ok(make_field(sym.characteristic(), m)?)
}

#[derive(Clone, Debug)]
pub struct ProductCode {
    a: CyclicCode,
    b: CyclicCode,
    bezout: (i64, i64),
    code: CyclicCode,
    view_a: CodeView,
    view_b: CodeView,
    gamma: FieldElement,
}

impl ProductCode {
    pub fn new(a: &CyclicCode, b: &CyclicCode) -> Result<Self, ProductError> {
        if a.q() != b.q() {
            return Err(ProductError::AlphabetMismatch(a.q(), b.q()));
        }
        let (na, nb) = (a.length(), b.length());
        let bez = bezout(na, nb)?;
        let d = product_defining_set(a.defining_set(), b.defining_set())?;
        let ctx = a.symbol_field();
        // B's generator lives in its own copy of GF(q); both come from the
        // process-wide field cache, so the contexts coincide.
        let g = product_generator(a.generator(), b.generator(), na, nb, ctx)?;
        let code = CyclicCode::from_parts(a.q(), na * nb, &d, &g)?;
        let k = code.view().field().clone();
        let view_a = a.view_in(&k)?;
        let view_b = b.view_in(&k)?;
        let gamma = k.mul(
            k.pow(view_a.alpha(), nb % na.max(1)),
            k.pow(view_b.alpha(), na % nb.max(1)),
        );
        Ok(ProductCode {
            a: a.clone(),
            b: b.clone(),
            bezout: bez,
            code,
            view_a,
            view_b,
            gamma,
        })
    }

    pub fn component_a(&self) -> &CyclicCode {
        &self.a
    }

    pub fn component_b(&self) -> &CyclicCode {
        &self.b
    }

    pub fn bezout(&self) -> (i64, i64) {
        self.bezout
    }

    /// The product as a cyclic code of length `n_a n_b`.
    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    pub fn defining_set(&self) -> &DefiningSet {
        self.code.defining_set()
    }

    pub fn generator(&self) -> &Poly {
        self.code.generator()
    }

    /// The joint field GF(q^s), `s = lcm(s_a, s_b)`.
    pub fn field(&self) -> &Arc<FieldContext> {
        self.view_a.field()
    }

    pub fn view_a(&self) -> &CodeView {
        &self.view_a
    }

    pub fn view_b(&self) -> &CodeView {
        &self.view_b
    }

    /// `alpha^{n_b} beta^{n_a}`, of order `n_a n_b`.
    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    /// Exponents `x` in `[0, N)` with `g(gamma^x) = 0`.
    pub fn generator_roots(&self) -> DefiningSet {
        let k = self.field();
        let emb = self.view_a.symbols();
        let g = self.generator().map(|c| emb.map(c));
        let n = self.code.length();
        DefiningSet::new(n, (0..n).filter(|&x| g.eval(k.pow(self.gamma, x), k).is_zero()))
            .expect("exponents are below the length")
    }

    /// Diagonal read-out of an `n_a x n_b` array whose columns lie in `A`
    /// and rows in `B`.
    pub fn interleave(&self, mat: &[Vec<FieldElement>]) -> Result<Poly, ProductError> {
        let (na, nb) = (self.a.length() as usize, self.b.length() as usize);
        if mat.len() != na || mat.iter().any(|r| r.len() != nb) {
            return Err(ProductError::BadShape { rows: na, cols: nb });
        }
        for v in 0..nb {
            let col = Poly::new(mat.iter().map(|r| r[v]).collect());
            if !self.a.contains(&col) {
                return Err(ProductError::ColumnNotInCode(v));
            }
        }
        for (u, row) in mat.iter().enumerate() {
            if !self.b.contains(&Poly::new(row.clone())) {
                return Err(ProductError::RowNotInCode(u));
            }
        }
        Ok(Poly::new((0..na * nb).map(|i| mat[i % na][i % nb]).collect()))
    }

    pub fn deinterleave(&self, word: &Poly) -> Result<Vec<Vec<FieldElement>>, ProductError> {
        let (na, nb) = (self.a.length() as usize, self.b.length() as usize);
        if word.degree().is_some_and(|d| d >= na * nb) {
            return Err(CodeError::WrongLength {
                expected: na * nb,
                got: word.degree().unwrap() + 1,
            }
            .into());
        }
        let ctx = self.a.symbol_field();
        let mut mat = vec![vec![ctx.zero(); nb]; na];
        for i in 0..na * nb {
            mat[i % na][i % nb] = word.coeff(ctx, i);
        }
        Ok(mat)
    }

    /// The array `M[u][v] = x_u y_v` for codewords `x ∈ A`, `y ∈ B`.
    pub fn outer(&self, x: &Poly, y: &Poly) -> Vec<Vec<FieldElement>> {
        let ctx = self.a.symbol_field();
        let (na, nb) = (self.a.length() as usize, self.b.length() as usize);
        (0..na)
            .map(|u| (0..nb).map(|v| ctx.mul(x.coeff(ctx, u), y.coeff(ctx, v))).collect())
            .collect()
    }
}
