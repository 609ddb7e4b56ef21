//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass line (run with `-- --nocapture` to see them). Tolerances are fixed
//! here, not configurable.

use pbec::bounds::{self, ChannelShape, ComparisonReport, GvBranch, SweepMode};
use pbec::code::{greedy_avoiding, CodeChain};
use pbec::error_set::difference_set;
use pbec::gcc::{self, GccSpec};
use pbec::oracle::{self, OracleBudget};
use pbec::{AdmissibilityProfile, ErrorSet, FieldSpec, FqMatrix, LinearCode, PbeChannel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

#[test]
fn criterion_01_small_burst_beats_classical_packing() {
    let (classical_h, _) = bounds::rate_classical(2, 1.0 / 60.0);
    assert!(
        (classical_h - 0.878).abs() <= 1e-3,
        "classical packing bound at fraction 1/60: {classical_h}"
    );
    let (_, r_gv) = bounds::rate_hpbe_closed(2, 0.2, 1.0 / 12.0);
    assert!(
        (r_gv - 0.880).abs() <= 1e-3,
        "burst GV bound at T=1/5, W=1/12: {r_gv}"
    );
    println!("[criterion 1] PASS: classical 0.878 vs burst-aware 0.880 (tol 1e-3)");
}

#[test]
fn criterion_02_construction_rates_at_example_point() {
    let shape = ChannelShape::hamming(2, 0.1, 0.2);
    let r_gv = bounds::rate_pbe_gv(&shape);
    let r2 = bounds::rate_2lvl(&shape);
    let r3 = bounds::rate_3lvl(&shape);
    assert!((r_gv - 0.81).abs() <= 5e-3, "GV {r_gv}");
    assert!((r2 - 0.71).abs() <= 5e-3, "two-level {r2}");
    assert!((r3 - 0.76).abs() <= 5e-3, "three-level {r3}");
    println!("[criterion 2] PASS: rates 0.81 / 0.71 / 0.76 at T=0.1, W=0.2 (tol 5e-3)");
}

#[test]
fn criterion_03_sweeps_match_published_curves() {
    let rows = bounds::sweep(2, SweepMode::FixT(0.25), 51);
    let fix_t_golden: &[(f64, [f64; 4])] = &[
        // (W, [gv, h, r2lvl, r3lvl])
        (0.1, [0.8377443751081735, 0.9188721875540867, 0.8, 0.8188721875540868]),
        (0.4, [0.3509775004326937, 0.6754887502163469, 0.19999999999999996, 0.27548875021634683]),
        (0.5, [0.18872187554086717, 0.5943609377704335, 0.0, 0.09436093777043358]),
        (1.0, [0.0, 0.18872187554086717, 0.0, 0.0]),
    ];
    for (x, [gv, h, r2, r3]) in fix_t_golden {
        let p = rows
            .iter()
            .find(|(rx, _)| (rx - x).abs() < 1e-12)
            .unwrap()
            .1
            .clamped();
        assert!((p.r_gv - gv).abs() <= 1e-3, "gv at W={x}: {}", p.r_gv);
        assert!((p.r_h - h).abs() <= 1e-3, "h at W={x}: {}", p.r_h);
        assert!((p.r_2lvl - r2).abs() <= 1e-3, "2lvl at W={x}: {}", p.r_2lvl);
        assert!((p.r_3lvl - r3).abs() <= 1e-3, "3lvl at W={x}: {}", p.r_3lvl);
    }
    let rows = bounds::sweep(2, SweepMode::FixW(0.3), 41);
    let fix_w_golden: &[(f64, [f64; 4])] = &[
        (0.25, [0.513233125324520, 0.756616562662260, 0.4, 0.456616562662260]),
        (0.5, [0.4, 0.7, 0.4, 0.4]),
    ];
    for (x, [gv, h, r2, r3]) in fix_w_golden {
        let p = rows
            .iter()
            .find(|(rx, _)| (rx - x).abs() < 1e-12)
            .unwrap()
            .1
            .clamped();
        assert!((p.r_gv - gv).abs() <= 1e-3, "gv at T={x}: {}", p.r_gv);
        assert!((p.r_h - h).abs() <= 1e-3, "h at T={x}: {}", p.r_h);
        assert!((p.r_2lvl - r2).abs() <= 1e-3, "2lvl at T={x}: {}", p.r_2lvl);
        assert!((p.r_3lvl - r3).abs() <= 1e-3, "3lvl at T={x}: {}", p.r_3lvl);
    }
    println!("[criterion 3] PASS: fixed-T and fixed-W sweeps hit the published points (tol 1e-3)");
}

fn worked_example_code() -> gcc::GccCode {
    let b1 = LinearCode::from_generators(
        gf2(),
        4,
        &[vec![1, 1, 0, 0], vec![1, 0, 1, 0], vec![1, 1, 1, 1]],
    )
    .unwrap();
    let b2 = LinearCode::from_generators(gf2(), 4, &[vec![1, 1, 1, 1]]).unwrap();
    let chain = CodeChain::new(vec![b1, b2]).unwrap();
    let gf4 = FieldSpec::new(2, 2).unwrap();
    let a1 = LinearCode::from_generators(gf4, 2, &[vec![1, 1]]).unwrap();
    let a2 = LinearCode::full_space(gf2(), 2);
    gcc::gcc_build(GccSpec::new(chain, vec![a1, a2]).unwrap()).unwrap()
}

#[test]
fn criterion_04_worked_construction_is_bit_exact() {
    let code = worked_example_code();
    let printed = LinearCode::from_generators(
        gf2(),
        8,
        &[
            vec![1, 1, 1, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 1, 0, 0, 1, 1],
        ],
    )
    .unwrap();
    let built = code.flattened();
    assert_eq!(code.dimension(), 4);
    assert_eq!(built, printed);
    let printed_words: Vec<Vec<u64>> = printed.codewords().collect();
    assert_eq!(printed_words.len(), 16);
    for cw in &printed_words {
        assert!(built.contains(cw));
    }
    for cw in built.codewords() {
        assert!(printed.contains(&cw));
    }
    println!("[criterion 4] PASS: built code is set-equal to the four printed arrays (16 codewords)");
}

fn random_code(rng: &mut ChaCha8Rng, spec: &FieldSpec, n: usize, rows: usize) -> LinearCode {
    let q = spec.q();
    let gens: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
        .collect();
    LinearCode::from_generators(spec.clone(), n, &gens).unwrap()
}

#[test]
fn criterion_05_certified_codes_always_pass_the_oracle() {
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut certified = 0usize;
    let mut meaningful = 0usize; // t, w >= 1 and some nontrivial condition used
    let mut attempts = 0usize;
    while (certified < 50 || meaningful < 15) && attempts < 20_000 {
        attempts += 1;
        let n = rng.gen_range(2..=6usize);
        let m = rng.gen_range(2..=3usize);
        let t = rng.gen_range(0..=2usize.min(n));
        let w = rng.gen_range(0..=2usize.min(m));
        let levels = rng.gen_range(1..=2usize);
        let structured = rng.gen_bool(0.7);

        // inner chain: either greedy ball-avoiding codes (which carry real
        // distance) or purely random spans
        let b1 = if structured {
            let radius = rng.gen_range(0..=n.min(4));
            let forbidden = ErrorSet::hamming_ball(gf2(), n, radius).unwrap();
            let seed = rng.gen();
            match greedy_avoiding(&gf2(), n, &forbidden, seed, None, None) {
                Ok(c) => c,
                Err(_) => continue,
            }
        } else {
            let rows = rng.gen_range(1..=n);
            random_code(&mut rng, &gf2(), n, rows)
        };
        if b1.k() == 0 {
            continue;
        }
        let chain = if levels == 1 || b1.k() == 1 {
            CodeChain::new(vec![b1]).unwrap()
        } else {
            // a random proper subcode spanned by random codewords
            let sub_rows: Vec<Vec<u64>> = (0..rng.gen_range(1..b1.k()))
                .map(|_| {
                    let msg: Vec<u64> = (0..b1.k()).map(|_| rng.gen_range(0..2)).collect();
                    b1.encode(&msg)
                })
                .collect();
            let b2 = LinearCode::from_generators(gf2(), n, &sub_rows).unwrap();
            if b2.k() == 0 || b2.k() >= b1.k() {
                continue;
            }
            CodeChain::new(vec![b1, b2]).unwrap()
        };
        let s = chain.len();
        let mut outers = Vec::new();
        let mut ok = true;
        for j in 0..s {
            let gap = if j + 1 < s {
                chain.codes()[j].k() - chain.codes()[j + 1].k()
            } else {
                chain.codes()[s - 1].k()
            };
            let ext = match gf2().extension(gap as u32) {
                Ok(e) => e,
                Err(_) => {
                    ok = false;
                    break;
                }
            };
            let dim = rng.gen_range(1..=m);
            let outer = if structured {
                match LinearCode::reed_solomon(ext, m, dim) {
                    Ok(c) => c,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            } else {
                random_code(&mut rng, &ext, m, dim)
            };
            outers.push(outer);
        }
        if !ok {
            continue;
        }
        let Ok(spec) = GccSpec::new(chain, outers) else {
            continue;
        };
        let Ok(code) = gcc::gcc_build(spec) else {
            continue;
        };
        let cert = gcc::certify_hamming(&code, t, w).unwrap();
        if !cert.valid {
            continue;
        }
        // the generic certificate must agree with the Hamming shortcut
        let e1 = ErrorSet::zero(gf2(), n);
        let e2 = ErrorSet::hamming_ball(gf2(), n, t).unwrap();
        let generic = gcc::certify_property1(&code, &e1, &e2, w).unwrap();
        assert!(generic.valid, "generic certificate disagrees at n={n} m={m} t={t} w={w}");

        certified += 1;
        let nontrivial = cert.levels.iter().any(|v| {
            matches!(
                v.condition,
                Some(gcc::LevelCondition::SingleBurstMargin) | Some(gcc::LevelCondition::InnerAlone)
            )
        });
        if t >= 1 && w >= 1 && nontrivial {
            meaningful += 1;
        }
        let ch = PbeChannel::hamming(gf2(), n, m, t, w).unwrap();
        let verdict = oracle::is_pbecc_linear(&code.flattened(), &ch, &budget).unwrap();
        assert!(
            verdict,
            "counterexample: certified code fails bursts at n={n} m={m} t={t} w={w}"
        );
    }
    assert!(certified >= 50, "only {certified} certified instances in {attempts} attempts");
    assert!(meaningful >= 15, "only {meaningful} nontrivial instances with t,w >= 1");
    println!(
        "[criterion 5] PASS: {certified} randomized certified codes (of {attempts} sampled, {meaningful} nontrivial with t,w >= 1), zero oracle counterexamples"
    );
}

#[test]
fn criterion_06_pair_scan_equals_fanout_oracle_exhaustively() {
    let budget = OracleBudget::default();
    let ch = PbeChannel::hamming(gf2(), 2, 3, 1, 1).unwrap();
    // every linear code of dimension <= 3 in F_2^(2x3), by RREF dedup
    let mut seen = std::collections::HashSet::new();
    let mut codes: Vec<LinearCode> = vec![LinearCode::zero_code(gf2(), 6)];
    let all: Vec<u64> = (1..64).collect();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                let rows: Vec<Vec<u64>> = [a, b, c]
                    .iter()
                    .map(|&x| (0..6).map(|i| (x >> i) & 1).collect())
                    .collect();
                let code = LinearCode::from_generators(gf2(), 6, &rows).unwrap();
                let key: Vec<u64> = (0..code.k()).flat_map(|r| code.generator().row(r).to_vec()).collect();
                if seen.insert(key) {
                    codes.push(code);
                }
            }
        }
    }
    // 63 of dim 1, 651 of dim 2, 1395 of dim 3, plus the zero code
    assert_eq!(codes.len(), 1 + 63 + 651 + 1395);
    for code in &codes {
        let linear = oracle::is_pbecc_linear(code, &ch, &budget).unwrap();
        let words: Vec<FqMatrix> = code
            .codewords()
            .map(|flat| FqMatrix::from_flat_columns(gf2(), 2, 3, &flat))
            .collect();
        let fanout = oracle::is_one_shot(&words, &ch, &budget).unwrap();
        assert_eq!(linear, fanout, "oracles disagree on {:?}", code);
    }
    println!(
        "[criterion 6] PASS: pair-scan and fan-out oracles agree on all {} codes",
        codes.len()
    );
}

#[test]
fn criterion_07_skewed_error_sets_flip_the_gv_branch() {
    let spec = FieldSpec::prime(31).unwrap();
    let e1 =
        ErrorSet::explicit_from_integers(spec.clone(), 1, &[vec![0], vec![3], vec![7]]).unwrap();
    let e2 = ErrorSet::explicit_from_integers(
        spec,
        1,
        &[vec![-4], vec![0], vec![3], vec![7], vec![10]],
    )
    .unwrap();
    let d11 = difference_set(&e1, &e1).unwrap().size().unwrap();
    let d12 = difference_set(&e1, &e2).unwrap().size().unwrap();
    let d22 = difference_set(&e2, &e2).unwrap().size().unwrap();
    assert_eq!((d11, d12, d22), (7, 9, 13));
    assert!(d11 * d22 > d12 * d12, "7 * 13 > 9^2");
    let profile = AdmissibilityProfile::empirical(&e1, &e2).unwrap();
    for w in [0.1, 0.3, 0.7] {
        let shape = ChannelShape::new(31, w, profile.clone());
        assert_eq!(bounds::gv_branch(&shape), GvBranch::Skewed);
    }
    println!("[criterion 7] PASS: per-coordinate sizes (7, 9, 13), aligned-burst branch taken");
}

#[test]
fn criterion_08_comparison_identities_on_a_dense_grid() {
    const TOL: f64 = 1e-12;
    for ti in 0..50 {
        for wi in 0..50 {
            let t = ti as f64 / 49.0;
            let w = wi as f64 / 49.0;
            let rep = ComparisonReport::hamming(2, t, w);
            assert!(rep.identity_residual <= TOL, "identity at t={t} w={w}");
            assert!(rep.gv_gap_residual <= TOL, "gv gap at t={t} w={w}");
            let (sh, sgv) = rep.classical_slack.unwrap();
            assert!(sh >= -TOL && sgv >= -TOL, "classical slack at t={t} w={w}");
        }
        // seam continuity of the two GV branches at 2W = 1
        let t = ti as f64 / 49.0;
        let p = AdmissibilityProfile::hamming(2, t);
        let low = 1.0 - ((1.0 - 2.0 * 0.5) * p.c11 + 2.0 * 0.5 * p.c12);
        let high = 1.0 - (2.0 * (1.0 - 0.5) * p.c12 + (2.0 * 0.5 - 1.0) * p.c22);
        assert!((low - high).abs() <= TOL, "seam at t={t}");
    }
    println!("[criterion 8] PASS: identities, inequalities, and seam continuity on a 50x50 grid (tol 1e-12)");
}

#[test]
fn criterion_09_exact_maxima_sit_between_construction_and_pigeonhole() {
    let budget = OracleBudget::default();
    // (n, m, t, w) with n*m <= 12
    let instances = [(2usize, 2usize, 1usize, 1usize), (3, 2, 1, 1), (2, 3, 1, 1), (4, 2, 1, 1), (6, 2, 2, 2), (3, 4, 2, 2)];
    let mut construction_checks = 0;
    for (n, m, t, w) in instances {
        let ch = PbeChannel::hamming(gf2(), n, m, t, w).unwrap();
        let (size, witness) = oracle::max_code_search(&ch, &budget).unwrap();
        assert!(oracle::is_one_shot(&witness, &ch, &budget).unwrap());
        let pigeonhole = oracle::pigeonhole_bound(&ch).unwrap();
        assert!(
            size <= pigeonhole,
            "({n},{m},{t},{w}): max {size} beats pigeonhole {pigeonhole}"
        );
        for levels in [2, 3] {
            let built = if levels == 2 {
                gcc::construct_2level(&ch, 11)
            } else {
                gcc::construct_3level(&ch, 11)
            };
            if let Ok((code, cert)) = built {
                assert!(cert.valid);
                let lower = 1u128 << code.dimension();
                assert!(
                    lower <= size,
                    "({n},{m},{t},{w}): certified 2^{} exceeds max {size}",
                    code.dimension()
                );
                construction_checks += 1;
            }
        }
    }
    assert!(construction_checks >= 6, "too few construction lower bounds exercised");
    println!(
        "[criterion 9] PASS: exact maxima within [construction, pigeonhole] on {} tiny channels",
        instances.len()
    );
}

#[test]
fn criterion_10_difference_counts_respect_the_column_type_bound() {
    let budget = OracleBudget::default();
    let mut checked = 0;
    for n in 1..=4usize {
        for m in 1..=3usize {
            for w in 0..=2usize.min(m) {
                for t in 0..=n {
                    let ch = PbeChannel::hamming(gf2(), n, m, t, w).unwrap();
                    let exact = oracle::delta_pbe_size(&ch, &budget).unwrap();
                    let bound = oracle::delta_pbe_upper_bound(&ch).unwrap();
                    assert!(
                        exact <= bound,
                        "({n},{m},{t},{w}): exact {exact} beats the bound {bound}"
                    );
                    checked += 1;
                }
            }
        }
    }
    // a two-radius instance for the general column-type split
    let e1 = ErrorSet::hamming_ball(gf2(), 3, 1).unwrap();
    let e2 = ErrorSet::hamming_ball(gf2(), 3, 2).unwrap();
    for w in 0..=2usize {
        let ch = PbeChannel::new(e1.clone(), e2.clone(), 2, w).unwrap();
        let exact = oracle::delta_pbe_size(&ch, &budget).unwrap();
        let bound = oracle::delta_pbe_upper_bound(&ch).unwrap();
        assert!(exact <= bound);
        checked += 1;
    }
    println!("[criterion 10] PASS: exact difference-set sizes under the multinomial bound on {checked} channels");
}

/// Supporting check for criterion 9's lower-bound leg: a greedy linear
/// code avoiding the explicit difference set is itself a one-shot code.
#[test]
fn greedy_linear_codes_are_valid_max_code_lower_bounds() {
    let budget = OracleBudget::default();
    let ch = PbeChannel::hamming(gf2(), 3, 2, 1, 1).unwrap();
    let bursts: Vec<Vec<u64>> = ch.enumerate(1 << 20).unwrap().map(|x| x.flatten_columns()).collect();
    let mut diffs = Vec::new();
    for x in &bursts {
        for y in &bursts {
            diffs.push(x.iter().zip(y).map(|(&a, &b)| a ^ b).collect::<Vec<u64>>());
        }
    }
    let forbidden = ErrorSet::explicit(gf2(), 6, diffs).unwrap();
    let code = greedy_avoiding(&gf2(), 6, &forbidden, 2, None, None).unwrap();
    assert!(oracle::is_pbecc_linear(&code, &ch, &budget).unwrap());
    let (size, _) = oracle::max_code_search(&ch, &budget).unwrap();
    assert!((1u128 << code.k()) <= size);
}
