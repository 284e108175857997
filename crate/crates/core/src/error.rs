use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the ceiling {ceiling}")]
    TooLarge { p: u64, m: u32, ceiling: u64 },
    #[error("elements belong to different field contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {index} is not an element of a field of size {size}")]
    BadIndex { index: u64, size: u64 },
    #[error("no element of order {n}: it does not divide {group}")]
    NoSuchOrder { n: u64, group: u64 },
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("GF({small}) is not a subfield of GF({big})")]
    NotSubfield { small: u64, big: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("code length must be positive")]
    ZeroLength,
    #[error("residue {residue} is out of range for length {n}")]
    ResidueOutOfRange { residue: u64, n: u64 },
    #[error("defining set is not closed under multiplication by q: {residue}*{q} mod {n} = {image} is missing")]
    NotCosetClosed { residue: u64, q: u64, n: u64, image: u64 },
    #[error("defining set covers all of Z_{0}: the code is zero")]
    ZeroCode(u64),
    #[error("generator polynomial does not divide X^{0} - 1")]
    NotDivisor(u64),
    #[error("generator polynomial is zero")]
    ZeroGenerator,
    #[error("generator coefficients do not lie in GF({0})")]
    NotOverBaseField(u64),
    #[error("expected {expected} symbols, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("symbol {symbol} is not in GF({q})")]
    BadSymbol { symbol: u64, q: u64 },
    #[error("generator does not vanish on the defining set for any primitive {0}-th root of unity")]
    GeneratorMismatch(u64),
    #[error("brute-force budget exceeded: need about {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("lengths {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("codes are over different alphabets (q = {0} and q = {1})")]
    AlphabetMismatch(u64, u64),
    #[error("matrix must be {rows} x {cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("column {0} is not a codeword of the first component code")]
    ColumnNotInCode(usize),
    #[error("row {0} is not a codeword of the second component code")]
    RowNotInCode(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("invalid certificate: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("decoding needs a GEN1 certificate with an associated code")]
    WrongVariant,
    #[error("received word has {got} symbols, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("b(X) must be a codeword of weight {expected} in the associated code")]
    BadAssociatedWord { expected: usize },
    #[error("no error locator of length <= {max_len} generates all syndrome sequences")]
    NoLocator { max_len: usize },
    #[error("trial error count {t} needs d_b*t <= delta-2")]
    TrialTooLarge { t: usize },
    #[error("locator of degree {degree} yields {found} error positions")]
    RootMismatch { degree: usize, found: usize },
    #[error("error values are inconsistent with the syndromes")]
    Inconsistent,
    #[error("recovered error value is not a nonzero element of GF(q)")]
    ValueOutsideBaseField,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exactly one of `defining_set` or `generator` must be given")]
    AmbiguousCode,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("certificate does not verify: {0}")]
    Unverified(String),
}
