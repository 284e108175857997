//! Integer helpers: gcd/lcm, modular reduction, trial-division factoring and
//! multiplicative orders. Inputs here are small (code lengths, field sizes up
//! to 2^32), so everything is plain `u64`/`i64` arithmetic.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Canonical residue of `x` modulo `n` in `[0, n)`.
pub fn modulo(x: i64, n: u64) -> u64 {
    debug_assert!(n > 0);
    x.rem_euclid(n as i64) as u64
}

/// Extended Euclid: returns `(g, s, t)` with `s*x + t*y = g = gcd(x, y)`.
pub fn ext_gcd(x: i64, y: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (x, y);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `x` modulo `n`, if it exists.
pub fn mod_inverse(x: i64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd(modulo(x, n) as i64, n as i64);
    (g == 1).then(|| modulo(s, n))
}

pub fn mod_pow(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let n = n as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes `q = p^e` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

/// Smallest `s >= 1` with `q^s = 1 (mod n)`; requires `gcd(n, q) = 1`.
pub fn multiplicative_order(q: u64, n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    if gcd(q % n, n) != 1 {
        return None;
    }
    let mut acc = q % n;
    let mut s = 1;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % n as u128) as u64;
        s += 1;
        if s > n {
            return None;
        }
    }
    Some(s)
}

/// Residues in `[1, n)` coprime to `n`; for `n = 1` this is `[1]` since every
/// integer is a unit modulo one.
pub fn units(n: u64) -> Vec<u64> {
    if n <= 1 {
        return vec![1];
    }
    (1..n).filter(|&m| gcd(m, n) == 1).collect()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 17), Some(8));
        assert_eq!(multiplicative_order(2, 3), Some(2));
        assert_eq!(multiplicative_order(5, 1), Some(1));
        assert_eq!(multiplicative_order(2, 6), None);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn inverses_and_units() {
        assert_eq!(mod_inverse(6, 17), Some(3));
        assert_eq!(mod_inverse(-1, 3), Some(2));
        assert_eq!(mod_inverse(3, 9), None);
        assert_eq!(units(9), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(units(1), vec![1]);
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(binomial(17, 2), 136);
    }
}
