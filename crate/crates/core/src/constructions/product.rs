use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{tags, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{check_strict, classify_lengths, Drawing, DrawingKind};

/// Drawing of `G □ H`: vertex `(v, w)` (index `v·|H| + w`) sits at
/// `g(v) + R_α(h(w))`, where `h` is rescaled so its longest length class
/// matches the longest class of `g`. Edge lengths are copied from the
/// factors; `α` is sampled until the drawing is strict.
pub fn draw_cartesian_product(dg: &Drawing, dh: &Drawing, seed: u64) -> Result<ConstructionResult> {
    let rel_tol = 1e-9;
    let cg = classify_lengths(dg, rel_tol);
    let ch = classify_lengths(dh, rel_tol);
    let scale = match (cg.representatives.last(), ch.representatives.last()) {
        (Some(&a), Some(&b)) if a > 0.0 && b > 0.0 => (a / b).sqrt(),
        _ => 1.0,
    };
    let bound = match (cg.count(), ch.count()) {
        (0, k) | (k, 0) => k,
        (a, b) => a + b - 1,
    };
    let graph = dg.graph.cartesian_product(&dh.graph);
    let kind = if dg.kind == DrawingKind::Strict && dh.kind == DrawingKind::Strict {
        DrawingKind::Strict
    } else {
        DrawingKind::DegenerateAllowed
    };
    let nh = dh.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let alpha = rng.gen_range(0.0..TAU);
        let hp: Vec<_> = dh.pos.iter().map(|&p| p.rotate(alpha) * scale).collect();
        let pos = (0..graph.n()).map(|i| dg.pos[i / nh] + hp[i % nh]).collect();
        let drawing = Drawing::new(graph.clone(), pos, kind)?;
        if kind == DrawingKind::DegenerateAllowed || check_strict(&drawing, 1e-9) {
            return Ok(ConstructionResult { drawing, claimed_bound: bound, lemma_tag: tags::PRODUCT, seed: Some(seed) });
        }
    }
    Err(Error::RetryExhausted { what: "product rotation", attempts: ATTEMPTS, seed })
}

/// `G^d` by repeated products of `dg` with itself.
pub fn draw_power(dg: &Drawing, d: usize, seed: u64) -> Result<ConstructionResult> {
    if d == 0 {
        return Err(Error::param("power needs d >= 1"));
    }
    let mut acc = ConstructionResult {
        drawing: dg.clone(),
        claimed_bound: classify_lengths(dg, 1e-9).count(),
        lemma_tag: tags::PRODUCT,
        seed: Some(seed),
    };
    for i in 1..d {
        let next = draw_cartesian_product(&acc.drawing, dg, seed.wrapping_add(i as u64))?;
        // every factor has the same length set, so the count never grows
        acc = ConstructionResult { claimed_bound: acc.claimed_bound, ..next };
    }
    Ok(acc)
}
