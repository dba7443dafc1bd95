//! Pipeline-level properties on small graphs where brute force can confirm
//! every claim.

use cyclespan::graph::{densify_to_min_degree, gnp_generate};
use cyclespan::hamilton::is_hamilton_cycle;
use cyclespan::pipeline::{
    express_cycle, hamilton_basis, hamilton_cycles_span_bruteforce, PipelineConfig,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Wherever enumeration certifies spanning and the minimum degree
    /// clears n/2 + 2, the constructive pipeline must reach full rank too.
    #[test]
    fn dense_small_graphs_decompose_whenever_spanning_holds(
        n in prop::sample::select(vec![7usize, 9, 11]),
        seed in any::<u64>(),
    ) {
        let floor = n / 2 + 3;
        let g = densify_to_min_degree(&gnp_generate(n, 0.5, seed), floor, seed);
        prop_assume!(hamilton_cycles_span_bruteforce(&g));
        let cfg = PipelineConfig { c_const: 2, seed, ..PipelineConfig::default() };
        let basis = hamilton_basis(&g, &cfg).unwrap();
        let target = g.m() + g.component_count() - g.n();
        prop_assert_eq!(basis.rank(), target);
        for cycle in &basis.cycles {
            prop_assert!(is_hamilton_cycle(&g, cycle));
        }
    }
}

/// Random in-span targets rebuilt from the combination express_cycle picks.
#[test]
fn express_round_trips_on_random_cycle_space_targets() {
    let g = cyclespan::graph::complete(9);
    let cfg = PipelineConfig { c_const: 2, seed: 5, ..PipelineConfig::default() };
    let basis = hamilton_basis(&g, &cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let mut target = g.zero_vector();
        for cycle in &basis.cycles {
            if rng.gen() {
                target.xor_assign(&g.cycle_vector(cycle).unwrap());
            }
        }
        let combo = express_cycle(&g, &basis.cycles, &target)
            .unwrap()
            .expect("basis spans, so every combination lies in span");
        let mut rebuilt = g.zero_vector();
        for i in combo {
            rebuilt.xor_assign(&g.cycle_vector(&basis.cycles[i]).unwrap());
        }
        assert_eq!(rebuilt, target);
    }
}

/// The rotation-extension engine carries the sparse regime: most seeds at
/// n = 51, p = 5 ln n / n must come back with a verified cycle.
#[test]
fn posa_finds_cycles_in_the_sparse_regime() {
    let n = 51;
    let p = 5.0 * (n as f64).ln() / n as f64;
    let mut found = 0;
    for seed in 0..10 {
        let g = gnp_generate(n, p, seed);
        let sc = cyclespan::hamilton::SearchConfig { seed, ..Default::default() };
        if let Some((cycle, _)) = cyclespan::hamilton::find_hamilton_cycle(&g, &sc) {
            assert!(is_hamilton_cycle(&g, &cycle));
            found += 1;
        }
    }
    assert!(found >= 8, "only {found}/10 sparse searches succeeded");
}
