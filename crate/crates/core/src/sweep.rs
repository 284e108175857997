//! Soundness sweep: every bound against the exact distance, over all cyclic
//! codes of a range of lengths and a family of associated codes.

use serde::Serialize;

use crate::arith;
use crate::bounds::{self, SearchOptions, Variant};
use crate::cyclic::{all_cyclic_codes, CyclicCode, DefiningSet};
use crate::distance::DistanceOracle;
use crate::error::CodeError;

/// Bounds from one associated code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociateRecord {
    pub n_b: u64,
    pub d_b: u64,
    pub gen1: u64,
    pub gen2: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub defining_set: Vec<u64>,
    pub d: u64,
    pub bch: u64,
    pub ht: u64,
    pub associates: Vec<AssociateRecord>,
}

impl SweepRecord {
    /// Names of the bounds that exceed the true distance, and the bch <= ht
    /// ordering.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.bch > self.ht {
            out.push(format!("bch={} > ht={}", self.bch, self.ht));
        }
        if self.ht > self.d {
            out.push(format!("ht={} > d={}", self.ht, self.d));
        }
        for a in &self.associates {
            if a.gen1 > self.d {
                out.push(format!("gen1[n_b={}]={} > d={}", a.n_b, a.gen1, self.d));
            }
            if a.gen2 > self.d {
                out.push(format!("gen2[n_b={}]={} > d={}", a.n_b, a.gen2, self.d));
            }
        }
        out
    }
}

/// The single parity check code of length `n` over GF(q).
pub fn single_parity_check(q: u64, n: u64) -> Result<CyclicCode, CodeError> {
    CyclicCode::from_defining_set(q, n, &DefiningSet::new(n, [0])?)
}

/// Bounds and exact distance for one code, with SPC associates of every
/// length in `2..=max_nb` coprime to `n` and to `q`.
pub fn analyze_code(code: &CyclicCode, max_nb: u64, oracle: &DistanceOracle) -> Result<SweepRecord, CodeError> {
    let q = code.q();
    let n = code.length();
    let d = oracle.min_distance(code)?;
    let bch = bounds::bch_bound(code.defining_set()).value;
    let ht = bounds::ht_bound(code.defining_set()).value;
    let mut associates = Vec::new();
    for nb in 2..=max_nb {
        if arith::gcd(nb, n) != 1 || arith::gcd(nb, q) != 1 {
            continue;
        }
        let b = single_parity_check(q, nb)?;
        let d_b = oracle.min_distance(&b)?;
        let opts = SearchOptions::default();
        let value = |v| {
            bounds::generalized_bound(code, &b, d_b, v, &opts)
                .expect("lengths are coprime")
                .value
        };
        associates.push(AssociateRecord {
            n_b: nb,
            d_b,
            gen1: value(Variant::Gen1),
            gen2: value(Variant::Gen2),
        });
    }
    Ok(SweepRecord {
        q,
        n,
        k: code.dimension(),
        defining_set: code.defining_set().to_vec(),
        d,
        bch,
        ht,
        associates,
    })
}

/// All nonzero cyclic codes over GF(q) with length in `[min_n, max_n]`
/// coprime to `q`, in length order and then enumeration order.
pub fn codes_in_range(q: u64, min_n: u64, max_n: u64, odd_only: bool) -> Result<Vec<CyclicCode>, CodeError> {
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        if arith::gcd(n, q) != 1 || (odd_only && n % 2 == 0) {
            continue;
        }
        out.extend(all_cyclic_codes(q, n)?);
    }
    Ok(out)
}

/// Runs [`analyze_code`] over `codes`; the output order follows the input.
pub fn sweep(codes: &[CyclicCode], max_nb: u64, oracle: &DistanceOracle) -> Vec<Result<SweepRecord, CodeError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        codes.par_iter().map(|c| analyze_code(c, max_nb, oracle)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        codes.iter().map(|c| analyze_code(c, max_nb, oracle)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_seven_is_sound() {
        let codes = codes_in_range(2, 7, 7, true).unwrap();
        assert_eq!(codes.len(), 7);
        for r in sweep(&codes, 9, &DistanceOracle::default()) {
            let r = r.unwrap();
            assert!(r.violations().is_empty(), "{r:?}");
            assert_eq!(r.associates.iter().map(|a| a.n_b).collect::<Vec<_>>(), vec![3, 5, 9]);
        }
    }
}
