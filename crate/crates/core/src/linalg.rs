//! Gaussian elimination over a finite field.

use crate::gf::{FieldContext, FieldElement};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(ctx: &FieldContext, m: &mut [Vec<FieldElement>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = ctx.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot_row = m[row][col..].to_vec();
        for (r, target) in m.iter_mut().enumerate() {
            let f = target[col];
            if r == row || f.is_zero() {
                continue;
            }
            for (x, &p) in target[col..].iter_mut().zip(&pivot_row) {
                *x = ctx.sub(*x, ctx.mul(f, p));
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(ctx: &FieldContext, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(ctx, &mut m).len()
}

/// One solution of `A x = b` (free variables set to zero), or `None` if the
/// system is inconsistent.
pub fn solve(ctx: &FieldContext, a: &[Vec<FieldElement>], b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    assert_eq!(a.len(), b.len());
    let n = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<FieldElement>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = row_reduce(ctx, &mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![ctx.zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn rank_and_solve() {
        let f = make_field(5, 1).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let a = vec![e(&[1, 2, 3]), e(&[2, 4, 6]), e(&[0, 1, 1])];
        assert_eq!(rank(&f, &a), 2);
        let b = e(&[1, 2, 4]);
        let x = solve(&f, &a, &b).unwrap();
        for (row, &rhs) in a.iter().zip(&b) {
            let lhs = row
                .iter()
                .zip(&x)
                .fold(f.zero(), |acc, (&p, &q)| f.add(acc, f.mul(p, q)));
            assert_eq!(lhs, rhs);
        }
        assert!(solve(&f, &a, &e(&[1, 3, 0])).is_none());
        assert_eq!(rank(&f, &[]), 0);
    }
}
