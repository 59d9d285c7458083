//! Acceptance criteria 1-9. Each test prints one `criterion N: PASS|FAIL`
//! line straight to stdout so the lines survive output capture.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tlschur::combinatorics::{decomposition_matrix, tilting_delta_mults, twisted_filtration, DecompTable, Weight};
use tlschur::domdim::{classify_projective, domdim_regular, hn_dimension, ExtendedNat, IntegralRing, ProjectiveClass, Regime};
use tlschur::hecke::BlessedConfig;
use tlschur::hook::Silent;
use tlschur::linalg::{kernel_basis, Field, Matrix};
use tlschur::oracle::{DomdimOutcome, ExplicitModule, SchurOracle};
use tlschur::tensor::double_centralizer_report;
use tlschur::verify::{direct_sum_law, hecke_presentation};
use tlschur::{PrimeField, Rationals, GF2, GF5};

fn report(criterion: u32, pass: bool, detail: &str, elapsed: Duration) {
    let status = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {criterion}: {status} ({:.2?}) {detail}\n", elapsed);
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn oracle(cfg: BlessedConfig, d: usize) -> SchurOracle<PrimeField> {
    SchurOracle::new(&cfg.params(d), &Silent).unwrap()
}

#[test]
fn criterion_1_decomposition_table_d46() {
    let start = Instant::now();
    let golden = DecompTable::from_csv(include_str!("../../../fixtures/decomp_d46.csv")).unwrap();
    let table = decomposition_matrix(46).unwrap();
    let row46: Vec<usize> = table.row(Weight(46)).unwrap().iter().map(|w| w.0).collect();
    let elapsed = start.elapsed();
    let pass = table == golden
        && table.size() == 24
        && row46 == [0, 8, 12, 14, 16, 32, 40, 44, 46]
        && elapsed < Duration::from_secs(1);
    report(1, pass, "decomposition matrix of S(2,46) matches the 24x24 golden table", elapsed);
}

#[test]
fn criterion_2_projective_classes() {
    let start = Instant::now();
    let mut infinite = Vec::new();
    let mut finite = Vec::new();
    for m in (16..28).step_by(2) {
        match classify_projective(28, Weight(m)).unwrap() {
            ProjectiveClass::InfiniteDomdim => infinite.push(m),
            ProjectiveClass::FiniteDomdim(_) => finite.push(m),
        }
    }
    let elapsed = start.elapsed();
    let pass = infinite == [18, 20, 22, 26] && finite == [16, 24] && elapsed < Duration::from_secs(1);
    report(2, pass, &format!("d=28: infinite {infinite:?}, finite {finite:?}"), elapsed);
}

fn regular_and_tilting(cfg: BlessedConfig, d: usize) -> (DomdimOutcome, DomdimOutcome, Duration) {
    let start = Instant::now();
    let o = oracle(cfg, d);
    let regular = o.domdim(&o.regular_module(), o.default_cap(), &Silent).unwrap().outcome;
    let elapsed = start.elapsed();
    let tilting = o.domdim(&o.tilting_zero().unwrap(), o.default_cap(), &Silent).unwrap().outcome;
    (regular, tilting, elapsed)
}

#[test]
fn criterion_3_and_4_regular_and_factor_two() {
    let start = Instant::now();
    let regime = Regime::Field { quantum_char_is_2: true };
    let mut pass3 = true;
    let mut pass4 = true;
    let mut details3 = Vec::new();
    let mut details4 = Vec::new();
    for cfg in BlessedConfig::ALL {
        for d in [2, 4] {
            let (regular, tilting, time) = regular_and_tilting(cfg, d);
            let limit = if d == 2 { Duration::from_secs(1) } else { Duration::from_secs(60) };
            let formula = domdim_regular(d, regime).unwrap();
            pass3 &= regular == DomdimOutcome::Exact(d)
                && regular.as_extended() == Some(formula)
                && time < limit;
            pass4 &= tilting == DomdimOutcome::Exact(d / 2)
                && tilting.as_extended().map(ExtendedNat::double) == regular.as_extended();
            details3.push(format!("{cfg} d={d}: {regular:?} in {time:.2?}"));
            details4.push(format!("{cfg} d={d}: {tilting:?}"));
        }
    }
    let elapsed = start.elapsed();
    let line3 = format!("regular module: {}", details3.join("; "));
    let line4 = format!("T(0): {}", details4.join("; "));
    let status4 = if pass4 { "PASS" } else { "FAIL" };
    std::io::stdout()
        .lock()
        .write_all(format!("criterion 4: {status4} ({elapsed:.2?}) {line4}\n").as_bytes())
        .unwrap();
    report(3, pass3, &line3, elapsed);
    assert!(pass4, "criterion 4 failed: {line4}");
}

#[test]
fn criterion_5_standard_chain() {
    let start = Instant::now();
    let mut pass = true;
    let mut details = Vec::new();
    for cfg in BlessedConfig::ALL {
        let o = oracle(cfg, 4);
        let values: Vec<DomdimOutcome> = [4, 2, 0]
            .iter()
            .map(|&m| {
                let delta = o.standard_module(Weight(m)).unwrap().0;
                o.domdim(&delta, o.default_cap(), &Silent).unwrap().outcome
            })
            .collect();
        pass &= values == [DomdimOutcome::Exact(4), DomdimOutcome::Exact(3), DomdimOutcome::Exact(2)];
        details.push(format!("{cfg}: Δ(4), Δ(2), Δ(0) -> {values:?}"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(120);
    report(5, pass, &details.join("; "), elapsed);
}

#[test]
fn criterion_6_double_centralizer() {
    let start = Instant::now();
    let mut pass = true;
    let mut details = Vec::new();
    for cfg in BlessedConfig::ALL {
        for d in 2..=5 {
            let r = double_centralizer_report(&cfg.params(d), &Silent).unwrap();
            pass &= r.passes();
            details.push(format!("{cfg} d={d}: TL {} S {}", r.tl_image_dim, r.schur_dim));
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(120);
    report(6, pass, &details.join("; "), elapsed);
}

#[test]
fn criterion_7_presentations() {
    let start = Instant::now();
    let mut pass = true;
    let mut checked = 0;
    for cfg in BlessedConfig::ALL {
        for d in 1..=5 {
            let params = cfg.params(d);
            let tl = params.tl_algebra().check_relations().unwrap();
            let (hecke, multiplicative, kernel) = hecke_presentation(&params).unwrap();
            for r in [&tl, &hecke, &multiplicative, &kernel] {
                pass &= r.all_hold();
                checked += r.checked;
            }
        }
    }
    report(7, pass, &format!("{checked} relations checked for d <= 5"), start.elapsed());
}

#[test]
fn criterion_8_hemmer_nakano_table() {
    let start = Instant::now();
    let qchar2 = Regime::Field { quantum_char_is_2: true };
    let generic = Regime::Field { quantum_char_is_2: false };
    let nondivisible = Regime::Integral(IntegralRing::new(false, false).unwrap());
    let divisible = Regime::Integral(IntegralRing::new(false, true).unwrap());
    let mut pass = true;
    for d in 2..=48usize {
        let half = (d / 2) as i64;
        let even = d % 2 == 0;
        let expect = |x: i64| if even { ExtendedNat::Finite(x) } else { ExtendedNat::Infinite };
        pass &= hn_dimension(d, qchar2).unwrap() == expect(half - 2);
        pass &= hn_dimension(d, generic).unwrap() == ExtendedNat::Infinite;
        pass &= hn_dimension(d, nondivisible).unwrap() == expect(half - 1);
        pass &= hn_dimension(d, divisible).unwrap() == expect(half - 2);
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(1);
    report(8, pass, "hn_dimension closed forms for 2 <= d <= 48 in all four regimes", elapsed);
}

fn random_matrix<F: Field>(field: &F, rng: &mut ChaCha8Rng, sample: &dyn Fn(&mut ChaCha8Rng) -> i64) -> Matrix<F> {
    let rows = rng.gen_range(1..9);
    let cols = rng.gen_range(1..9);
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| sample(rng)).collect())
        .collect::<Vec<Vec<i64>>>();
    Matrix::from_i64_rows(field, &data)
}

fn linear_laws<F: Field>(field: &F, rng: &mut ChaCha8Rng, sample: &dyn Fn(&mut ChaCha8Rng) -> i64) -> bool {
    (0..200).all(|_| {
        let a = random_matrix(field, rng, sample);
        let kernel = kernel_basis(&a);
        let rank = a.rank();
        let annihilated = kernel.iter().all(|v| a.mul_vec(v).unwrap().iter().all(|x| field.is_zero(x)));
        let independent = kernel.is_empty() || Matrix::from_columns(field, a.cols(), &kernel).rank() == kernel.len();
        let b = random_matrix(field, rng, sample);
        let b = Matrix::from_vec(field, a.cols(), b.cols(), {
            let mut data = Vec::new();
            for i in 0..a.cols() {
                for j in 0..b.cols() {
                    data.push(if i < b.rows() { b.get(i, j).clone() } else { field.zero() });
                }
            }
            data
        })
        .unwrap();
        let product = a.mul(&b).unwrap().rank();
        rank + kernel.len() == a.cols()
            && annihilated
            && independent
            && a.transpose().rank() == rank
            && product <= rank.min(b.rank())
    })
}

fn random_cyclic(o: &SchurOracle<PrimeField>, rng: &mut ChaCha8Rng) -> ExplicitModule<PrimeField> {
    let p = o.params().field().modulus();
    let v = o.tensor_space();
    loop {
        let mut seed = vec![0u32; v.dim()];
        for _ in 0..rng.gen_range(1..3) {
            seed[rng.gen_range(0..v.dim())] = rng.gen_range(1..p);
        }
        let m = v.cyclic_submodule(&[seed]).unwrap().0;
        if m.dim() > 0 {
            return m;
        }
    }
}

#[test]
fn criterion_9_property_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let linear = linear_laws(&GF2, &mut rng, &|r| r.gen_range(0..2))
        && linear_laws(&GF5, &mut rng, &|r| r.gen_range(0..5))
        && linear_laws(&Rationals, &mut rng, &|r| r.gen_range(-3..4));

    let tilting = (0..=64usize).all(|m| {
        let mults = tilting_delta_mults(Weight(m)).unwrap();
        if m < 2 || m % 2 == 1 {
            return !mults.is_empty();
        }
        let mut flat: BTreeMap<Weight, usize> = BTreeMap::new();
        for (a, b) in twisted_filtration(Weight(m)).unwrap() {
            *flat.entry(a).or_default() += 1;
            *flat.entry(b).or_default() += 1;
        }
        flat.values().all(|&c| c == 1) && flat.keys().copied().eq(mults.iter().copied())
    });

    let mut sums = Vec::new();
    for cfg in BlessedConfig::ALL {
        let o = oracle(cfg, 4);
        for _ in 0..5 {
            let m = random_cyclic(&o, &mut rng);
            let n = if rng.gen_bool(0.5) {
                random_cyclic(&o, &mut rng)
            } else {
                o.standard_module(Weight(2 * rng.gen_range(0..3))).unwrap().0
            };
            let (sum, min) = direct_sum_law(&o, &m, &n, o.default_cap(), &Silent).unwrap();
            sums.push((m.dim(), n.dim(), sum, min));
        }
    }
    let direct = sums.iter().all(|(_, _, sum, min)| sum == min);
    let pass = linear && tilting && direct;
    let detail = format!(
        "rank/kernel laws {linear}; tilting flatten m <= 64 {tilting}; direct-sum min law on {} pairs {direct}",
        sums.len()
    );
    report(9, pass, &detail, start.elapsed());
}

#[test]
#[ignore = "degree-six stretch target; run with --ignored"]
fn stretch_degree_six_regular() {
    let start = Instant::now();
    let o = oracle(BlessedConfig::Gf2U1, 6);
    let regular = o.domdim(&o.regular_module(), o.default_cap(), &Silent).unwrap().outcome;
    let elapsed = start.elapsed();
    report(
        3,
        regular == DomdimOutcome::Exact(6) && elapsed < Duration::from_secs(600),
        &format!("stretch: GF(2) d=6 regular module -> {regular:?}"),
        elapsed,
    );
}
