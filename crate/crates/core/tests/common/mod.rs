//! Seeded randomized checks shared by the acceptance target and the property suite.
#![allow(dead_code)]

use friezelab::cluster::{EShape, Quiver, Seed};
use friezelab::fixtures;
use friezelab::frieze::{default_depth, FriezePattern, Quiddity};
use friezelab::rep::{count_points, grassmannian_table, QuiverRep};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RNG_SEED: u64 = 0x5eed_f12e;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(RNG_SEED ^ salt)
}

/// Quivers of affine type used as starting points for random mutation.
pub fn affine_quivers() -> Vec<Quiver> {
    vec![
        fixtures::d4_quiver(),
        fixtures::e6_quiver(),
        fixtures::e7_star(),
        fixtures::e8_star(),
        fixtures::kronecker_quiver(),
        EShape::standard_quiver(1).unwrap(),
    ]
}

pub fn fixture_reps() -> Vec<(String, QuiverRep)> {
    let mut out = vec![
        ("m_lambda".to_string(), fixtures::m_lambda(2)),
        ("m_degenerate".to_string(), fixtures::m_degenerate()),
        ("kronecker_regular".to_string(), fixtures::kronecker_regular(2)),
    ];
    for t in 1..=3 {
        for (j, m) in fixtures::d4_tube(t).into_iter().enumerate() {
            out.push((format!("d4_tube{t}[{j}]"), m));
        }
    }
    out
}

/// Generates random quiddities until `count` of them yield a frieze of default depth,
/// and checks the diamond rule on each. Returns the number of rejected candidates.
pub fn diamond_on_random_quiddities(count: usize) -> Result<usize, String> {
    let mut rng = rng(1);
    let (mut ok, mut rejected) = (0, 0);
    while ok < count {
        let n = rng.gen_range(1..=6);
        let q: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        let quiddity = Quiddity::from_ints(&q).map_err(|e| e.to_string())?;
        match FriezePattern::generate(&quiddity, default_depth(n)) {
            Ok(f) => {
                f.check_diamond().map_err(|e| format!("{q:?}: {e}"))?;
                ok += 1;
            }
            Err(_) => rejected += 1,
        }
    }
    Ok(rejected)
}

/// Mutating twice at the same vertex restores the seed, for `count` random pairs.
pub fn involutivity(count: usize) -> Result<(), String> {
    let mut rng = rng(2);
    let quivers = affine_quivers();
    for _ in 0..count {
        let q = quivers.choose(&mut rng).unwrap();
        let prefix: Vec<usize> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..q.size())).collect();
        let seed = Seed::initial(q).mutate_word(&prefix).map_err(|e| e.to_string())?;
        let k = rng.gen_range(0..q.size());
        let back = seed.mutate(k).and_then(|s| s.mutate(k)).map_err(|e| e.to_string())?;
        if back != seed {
            return Err(format!("mu_{k} is not an involution after {prefix:?} on {q}"));
        }
    }
    Ok(())
}

/// Every cluster variable reached by a random word of length at most 10 is a Laurent
/// polynomial with positive coefficients (exact division never fails along the way).
pub fn laurent_exactness(count: usize) -> Result<(), String> {
    let mut rng = rng(3);
    let quivers = affine_quivers();
    for _ in 0..count {
        let q = quivers.choose(&mut rng).unwrap();
        let len = rng.gen_range(1..=10);
        let mut word = Vec::with_capacity(len);
        while word.len() < len {
            let k = rng.gen_range(0..q.size());
            // an immediate repeat just undoes the previous step
            if word.last() != Some(&k) {
                word.push(k);
            }
        }
        let seed = Seed::initial(q).mutate_word(&word).map_err(|e| format!("{word:?} on {q}: {e}"))?;
        if let Some(v) = seed.vars().iter().find(|v| !v.all_coefficients_positive()) {
            return Err(format!("{word:?} on {q}: {v} has a nonpositive coefficient"));
        }
    }
    Ok(())
}

/// Each interpolated counting polynomial agrees with a direct count at its held-out prime.
pub fn held_out_primes() -> Result<usize, String> {
    let mut rows = 0;
    for (name, m) in fixture_reps() {
        let table = grassmannian_table(&m, None).map_err(|e| format!("{name}: {e}"))?;
        for r in &table.rows {
            let p = &r.polynomial;
            let direct = count_points(&m, &r.e, p.held_out).map_err(|e| e.to_string())?;
            let predicted = p.eval(&BigInt::from(p.held_out));
            if p.primes.contains(&p.held_out) || predicted != BigInt::from(direct) || direct != p.held_out_count {
                return Err(format!("{name} at {}: held-out prime {} disagrees", r.e, p.held_out));
            }
            rows += 1;
        }
    }
    Ok(rows)
}
