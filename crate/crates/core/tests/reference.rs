//! Checks `lospa` against a direct transcription of the distance: enumerate
//! every permutation, sum per-pair costs computed from raw coordinates, take
//! the minimum. Shares no code with the cost-matrix or assignment modules.

use lospa_core::{lospa, BaseMetric, LospaParams, MultiTargetState, SolverBackend};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn permutations(t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(t - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, t - 1);
            out.push(p);
        }
    }
    out
}

fn reference_base(x: &[f64], y: &[f64], metric: BaseMetric) -> f64 {
    let q = match metric {
        BaseMetric::Euclidean => 2.0,
        BaseMetric::PNorm(q) => q,
    };
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs().powf(q))
        .sum::<f64>()
        .powf(1.0 / q)
}

fn reference_lospa(a: &[Vec<f64>], b: &[Vec<f64>], p: f64, alpha: f64, metric: BaseMetric) -> f64 {
    let t = a.len();
    let best = permutations(t)
        .iter()
        .map(|phi| {
            (0..t)
                .map(|j| {
                    let mismatch = if j == phi[j] { 0.0 } else { 1.0 };
                    reference_base(&a[j], &b[phi[j]], metric).powf(p) + alpha.powf(p) * mismatch
                })
                .sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min);
    (best / t as f64).powf(1.0 / p)
}

#[test]
fn enumeration_helper_counts() {
    assert_eq!(permutations(1).len(), 1);
    assert_eq!(permutations(4).len(), 24);
    let mut all = permutations(5);
    all.sort();
    all.dedup();
    assert_eq!(all.len(), 120);
}

#[test]
fn reference_reproduces_table_values() {
    let truth: Vec<Vec<f64>> = vec![vec![-10.0], vec![0.0], vec![10.0]];
    let row = |xs: [f64; 3]| xs.iter().map(|&x| vec![x]).collect::<Vec<_>>();
    let d = |est, alpha| reference_lospa(&row(est), &truth, 2.0, alpha, BaseMetric::Euclidean);
    assert!((d([-10.1, 0.1, 10.1], 1.0) - 0.1).abs() < 1e-9);
    assert!((d([0.1, -10.1, 10.1], 0.1) - (0.01f64 + 0.02 / 3.0).sqrt()).abs() < 1e-9);
    assert!((d([10.1, -10.1, 0.1], 1.0) - 1.01f64.sqrt()).abs() < 1e-9);
}

#[test]
fn library_matches_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10_59a);
    let metrics = [
        BaseMetric::Euclidean,
        BaseMetric::PNorm(1.0),
        BaseMetric::PNorm(2.0),
        BaseMetric::PNorm(3.5),
    ];
    for _ in 0..2000 {
        let t = rng.gen_range(1..=6);
        let nx = rng.gen_range(1..=3);
        let p = [1.0, 1.5, 2.0, 3.0][rng.gen_range(0..4)];
        let alpha = [0.0, 0.1, 1.0, 10.0][rng.gen_range(0..4)];
        let metric = metrics[rng.gen_range(0..metrics.len())];
        let mut draw = || -> Vec<Vec<f64>> {
            (0..t)
                .map(|_| (0..nx).map(|_| rng.gen_range(-5.0..5.0)).collect())
                .collect()
        };
        let (a, b) = (draw(), draw());
        let expected = reference_lospa(&a, &b, p, alpha, metric);

        let params = LospaParams::new(p, alpha, metric).unwrap();
        let (ma, mb) = (
            MultiTargetState::from_rows(&a).unwrap(),
            MultiTargetState::from_rows(&b).unwrap(),
        );
        for backend in [
            SolverBackend::brute_force(),
            SolverBackend::OptimalAssignment,
        ] {
            let got = lospa(&ma, &mb, &params, backend).unwrap().distance;
            assert!(
                (got - expected).abs() <= 1e-10 * (1.0 + expected),
                "t={t} nx={nx} p={p} alpha={alpha} {metric}: got {got}, reference {expected}"
            );
        }
    }
}
