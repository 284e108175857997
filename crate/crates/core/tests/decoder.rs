use cyclic_bounds::bounds::{self, BoundCertificate, SearchOptions, Variant};
use cyclic_bounds::cyclic::{CyclicCode, DefiningSet};
use cyclic_bounds::decoder::{DecodeStatus, Decoder};
use cyclic_bounds::Poly;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn code(q: u64, n: u64, d: &[u64]) -> CyclicCode {
    CyclicCode::from_defining_set(q, n, &DefiningSet::new(n, d.iter().copied()).unwrap()).unwrap()
}

fn a17() -> CyclicCode {
    code(2, 17, &[1, 2, 4, 8, 9, 13, 15, 16])
}

fn example() -> Decoder {
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
    Decoder::new(&a17(), &code(2, 3, &[0]), &cert).unwrap()
}

fn ternary() -> Decoder {
    let a = code(3, 13, &[1, 2, 3, 5, 6, 9]);
    let b = code(3, 2, &[0]);
    let cert = bounds::generalized_bound(&a, &b, 2, Variant::Gen1, &SearchOptions::default())
        .unwrap()
        .certificate
        .unwrap();
    Decoder::new(&a, &b, &cert).unwrap()
}

fn codewords(c: &CyclicCode) -> Vec<Vec<u64>> {
    let (q, k, n) = (c.q(), c.dimension() as u32, c.length() as usize);
    (0..q.pow(k))
        .map(|m| {
            let msg: Vec<u64> = (0..k).map(|i| m / q.pow(i) % q).collect();
            c.encode(&msg).unwrap().to_indices(n)
        })
        .collect()
}

fn random_codeword(c: &CyclicCode, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let msg: Vec<u64> = (0..c.dimension()).map(|_| rng.gen_range(0..c.q())).collect();
    c.encode(&msg).unwrap().to_indices(c.length() as usize)
}

fn plant(c: &CyclicCode, base: &[u64], t: usize, rng: &mut ChaCha8Rng) -> (Vec<u64>, Vec<usize>) {
    let k = c.symbol_field();
    let mut pos: Vec<usize> = (0..base.len())
        .collect::<Vec<_>>()
        .choose_multiple(rng, t)
        .copied()
        .collect();
    pos.sort();
    let mut r = base.to_vec();
    for &p in &pos {
        let e = k.element(rng.gen_range(1..c.q())).unwrap();
        r[p] = k.add(k.element(r[p]).unwrap(), e).index();
    }
    (r, pos)
}

fn poly(c: &CyclicCode, v: &[u64]) -> Poly {
    c.word(v).unwrap()
}

#[test]
fn syndromes_are_linear_and_vanish_on_codewords() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for dec in [example(), ternary()] {
        let a = dec.code().clone();
        let k = a.symbol_field();
        for _ in 0..100 {
            let c = random_codeword(&a, &mut rng);
            assert!(dec.syndromes(&poly(&a, &c)).is_zero());
            let (r1, _) = plant(&a, &c, 2, &mut rng);
            let (r2, _) = plant(&a, &vec![0; c.len()], 1, &mut rng);
            let sum: Vec<u64> = r1
                .iter()
                .zip(&r2)
                .map(|(&x, &y)| k.add(k.element(x).unwrap(), k.element(y).unwrap()).index())
                .collect();
            let lhs = dec.syndromes(&poly(&a, &sum));
            let rhs = dec
                .syndromes(&poly(&a, &r1))
                .add(&dec.syndromes(&poly(&a, &r2)), dec.field());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn locator_solves_the_key_equation_and_matches_the_product_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for dec in [example(), ternary()] {
        let a = dec.code().clone();
        let k = dec.field().clone();
        let cert = dec.certificate().clone();
        for _ in 0..300 {
            let t = rng.gen_range(1..=dec.radius());
            let (e, pos) = plant(&a, &vec![0; a.length() as usize], t, &mut rng);
            let s = dec.syndromes(&poly(&a, &e));
            let lambda = dec.solve_key_equation(&s, t).unwrap();
            assert_eq!(lambda, dec.locator_for(&pos), "{e:?}");
            let l = cert.d_b as usize * t;
            for seq in &s.sequences {
                for i in l..seq.len() {
                    let acc = (0..=l).fold(k.zero(), |acc, j| k.add(acc, k.mul(lambda.coeff(&k, j), seq[i - j])));
                    assert!(acc.is_zero(), "residual at {i} for {e:?}");
                }
            }
            assert_eq!(dec.find_error_positions(&lambda).unwrap(), pos);
            let values = dec.recover_error_values(&pos, &s).unwrap();
            let expect: Vec<u64> = pos.iter().map(|&p| e[p]).collect();
            assert_eq!(values.iter().map(|v| v.index()).collect::<Vec<_>>(), expect);
        }
    }
}

#[test]
fn decoding_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for dec in [example(), ternary()] {
        let a = dec.code().clone();
        for _ in 0..200 {
            let c = random_codeword(&a, &mut rng);
            let (r, _) = plant(&a, &c, dec.radius(), &mut rng);
            let first = dec.decode(&poly(&a, &r));
            let out = first.corrected.unwrap();
            let second = dec.decode(&poly(&a, &out));
            assert_eq!(second.status, DecodeStatus::Corrected);
            assert!(second.positions.is_empty());
            assert_eq!(second.corrected.unwrap(), out);
        }
    }
}

#[test]
fn random_errors_within_the_radius_are_corrected() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for dec in [example(), ternary()] {
        let a = dec.code().clone();
        for trial in 0..1000 {
            let t = 1 + trial % dec.radius();
            let c = random_codeword(&a, &mut rng);
            let (r, pos) = plant(&a, &c, t, &mut rng);
            let res = dec.decode(&poly(&a, &r));
            assert_eq!(res.status, DecodeStatus::Corrected, "{}: {r:?}", a.label());
            assert_eq!(res.positions, pos);
            assert_eq!(res.corrected.unwrap(), c);
            assert_eq!(res.rank, dec.certificate().d_b as usize * t);
        }
    }
}

#[test]
fn agrees_with_nearest_codeword_search() {
    let dec = example();
    let a = a17();
    let all = codewords(&a);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut within = 0;
    for _ in 0..500 {
        let c = &all[rng.gen_range(0..all.len())];
        let t = rng.gen_range(0..=4);
        let (r, _) = plant(&a, c, t, &mut rng);
        let near: Vec<&Vec<u64>> = all
            .iter()
            .filter(|w| w.iter().zip(&r).filter(|(x, y)| x != y).count() <= dec.radius())
            .collect();
        assert!(near.len() <= 1, "radius exceeds half the distance");
        let res = dec.decode(&poly(&a, &r));
        match near.first() {
            Some(&w) => {
                within += 1;
                assert_eq!(res.status, DecodeStatus::Corrected, "{r:?}");
                assert_eq!(res.corrected.as_ref(), Some(w));
            }
            None => assert_eq!(res.status, DecodeStatus::Failure, "{r:?} decoded outside the radius"),
        }
    }
    assert!(within > 200);
}

#[test]
fn failures_report_the_trials() {
    let dec = example();
    let a = a17();
    let mut r = vec![0u64; 17];
    for p in [0, 1, 2] {
        r[p] = 1;
    }
    let res = dec.decode(&poly(&a, &r));
    if res.status == DecodeStatus::Failure {
        assert!(res.failure.is_some());
        assert_eq!(res.trials.len(), 3);
        assert!(res.trials.iter().all(|t| t.rejection.is_some()));
        assert!(res.corrected.is_none());
    } else {
        let out = res.corrected.unwrap();
        assert!(a.contains(&poly(&a, &out)));
        assert!(out.iter().zip(&r).filter(|(x, y)| x != y).count() <= 2);
    }
}
