//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use common::{abelian_trivial_targets, pooled_catalog_le_8, NaiveGroup};
use mlakit::algebra::MlAlgebra;
use mlakit::catalog;
use mlakit::constructions::{
    common_descendant, isoclinism_pullback, quotient_isoclinism_check,
    subalgebra_center_expansion_check,
};
use mlakit::constructions::{adjunction_naturality_check, hom_correspondence_check};
use mlakit::enumeration::enumerate_star_structures;
use mlakit::isoclinism::{
    are_isoclinic, check_isoclinism_pair, find_stem_in_class, homomorphism_induces_isoclinism,
    is_stem, partition_by_isoclinism, stems_have_isomorphic_centers, IsoclinismPair,
};
use mlakit::morphism::{check_homomorphism, enumerate_homomorphisms, find_isomorphisms};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn mlakit_cmd() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mlakit"))
}

fn verdict(criterion: &str, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
}

/// Example reproduction: the CLI reports the exact invariant sets of the
/// order-8 algebra A and of V4 with a⋆b = a. Budget: 1 s.
#[test]
fn criterion_1_invariant_reproduction() {
    let start = Instant::now();
    let run = |file: &str| -> serde_json::Value {
        let out = mlakit_cmd()
            .args(["invariants", fixture(file).to_str().unwrap(), "--json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "invariants exited nonzero");
        serde_json::from_slice(&out.stdout).expect("report parses")
    };
    let a = run("z2cubed_star.json");
    let v4 = run("v4_star.json");
    let set = |v: &serde_json::Value, key: &str| -> Vec<String> {
        v[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap().to_string())
            .collect()
    };
    let ok = set(&a, "ml_center") == ["1", "z"]
        && set(&a, "m_commutator") == ["1", "x"]
        && set(&v4, "ml_center") == ["1"]
        && set(&v4, "m_commutator") == ["1", "a"]
        && a["is_stem"] == serde_json::json!(false)
        && v4["is_stem"] == serde_json::json!(true);
    let elapsed = start.elapsed();
    verdict("1 (invariant sets of A and V4)", ok && elapsed.as_secs_f64() < 1.0);
    assert!(ok, "invariant sets differ from the worked example");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
}

/// Worked-example verdicts: A ~ V4 with a verified pair, A ≇ V4,
/// V4 ≁ Z4, and Q8-improper ≁ every completion of D4's x⋆y = y.
/// Budget: 10 s.
#[test]
fn criterion_2_example_verdicts() {
    let start = Instant::now();
    let a = catalog::z2cubed_with_star();
    let v4 = catalog::v4_with_star();
    let z4 = catalog::z4_trivial();
    let q8 = catalog::q8_improper();

    let mut ok = true;
    match are_isoclinic(&a, &v4) {
        Some(mut pair) => ok &= check_isoclinism_pair(&mut pair, &a, &v4),
        None => ok = false,
    }
    ok &= find_isomorphisms(&a, &v4, usize::MAX).is_empty();
    ok &= are_isoclinic(&v4, &z4).is_none();
    let completions = catalog::d4_star_completions();
    ok &= !completions.is_empty();
    for d4 in &completions {
        ok &= are_isoclinic(&q8, d4).is_none();
    }
    let elapsed = start.elapsed();
    verdict("2 (example verdicts)", ok && elapsed.as_secs_f64() < 10.0);
    assert!(ok, "a worked-example verdict is wrong");
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}, budget 10 s");
}

/// Claimed for every group: the trivial and improper structures are
/// isoclinic. This holds exactly for the abelian fixtures: for a nonabelian
/// group no pair exists, because the ⋆-square forces `μ(g ⋆_t g') = 1` to
/// equal the improper value `[h, h']`, and λ of the quotients would have to
/// carry a trivial ⋆ to a nontrivial one. The criterion is asserted as
/// stated and fails on the nonabelian fixtures. Budget: 30 s.
#[test]
fn criterion_3_trivial_improper_isoclinism() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, group) in catalog::library_groups() {
        let t = catalog::trivial_star(&group);
        let i = catalog::improper_star(&group);
        let verdict = are_isoclinic(&t, &i).is_some();
        println!("  {name}: trivial ~ improper: {verdict}");
        if !verdict {
            failures.push(name);
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed.as_secs_f64() < 30.0;
    verdict("3 (trivial ~ improper on the order-≤16 library)", ok);
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}, budget 30 s");
    assert!(
        failures.is_empty(),
        "trivial and improper structures are NOT isoclinic for the nonabelian fixtures \
         {failures:?}: the ⋆-compatibility square μ(g ⋆_t g') = h ⋆_I h' forces [h,h'] = 1 \
         for all h, h', which only abelian groups satisfy"
    );
}

fn corollary_pair_valid(alpha: &[usize], g: &MlAlgebra, h: &MlAlgebra) -> bool {
    let gq = g.quotient(&g.ml_center()).unwrap();
    let hq = h.quotient(&h.ml_center()).unwrap();
    if gq.alg.order() != hq.alg.order() {
        return false;
    }
    // λ̂(g𝒵(G)) = α(g)𝒵(H) must be constant on cosets
    let mut lambda = vec![usize::MAX; gq.alg.order()];
    for x in 0..g.order() {
        let c = gq.project(x);
        let img = hq.project(alpha[x]);
        if lambda[c] == usize::MAX {
            lambda[c] = img;
        } else if lambda[c] != img {
            return false;
        }
    }
    let lm = check_homomorphism(&lambda, &gq.alg, &hq.alg);
    if !lm.is_isomorphism() {
        return false;
    }
    // μ̂ = α restricted to the multiplicative commutators
    let gm = g.extract_subalgebra(&g.m_commutator()).unwrap();
    let hm = h.extract_subalgebra(&h.m_commutator()).unwrap();
    if gm.alg.order() != hm.alg.order() {
        return false;
    }
    let mut mu = Vec::with_capacity(gm.alg.order());
    for s in 0..gm.alg.order() {
        match hm.sub_index(alpha[gm.parent_index(s)]) {
            Some(t) => mu.push(t),
            None => return false,
        }
    }
    let mm = check_homomorphism(&mu, &gm.alg, &hm.alg);
    if !mm.is_isomorphism() {
        return false;
    }
    let mut pair = IsoclinismPair {
        lambda: lm,
        mu: mm,
        g_quotient: gq,
        h_quotient: hq,
        g_mcomm: gm,
        h_mcomm: hm,
        certificate: Vec::new(),
    };
    check_isoclinism_pair(&mut pair, g, h)
}

fn lemma_2_identities(pair: &IsoclinismPair, g: &MlAlgebra, h: &MlAlgebra) -> bool {
    let mc = g.m_commutator();
    for a in mc.iter() {
        let mua = pair.mu_parent(a).unwrap();
        // (1) λ(g𝒵(G)) = μ(g)𝒵(H)
        if pair.lambda.apply(pair.g_quotient.project(a)) != pair.h_quotient.project(mua) {
            return false;
        }
        // (2) μ(ᴹ[g,g']) = ᴹ[μ(g), h] for λ(g'𝒵(G)) = h𝒵(H)
        for g2 in 0..g.order() {
            let hrep = pair.lambda_rep(g2);
            let lhs = pair.mu_parent(g.m_comm_elem(a, g2)).unwrap();
            if lhs != h.m_comm_elem(mua, hrep) {
                return false;
            }
        }
    }
    true
}

/// Theorem suite over the enumerated catalog of every ⋆-structure on every
/// group of order ≤ 8. Budget: 600 s.
#[test]
fn criterion_4_theorem_suite() {
    let start = Instant::now();
    let reps = pooled_catalog_le_8();
    println!("  pooled catalog: {} structures", reps.len());
    let one = catalog::trivial_star(&catalog::cyclic(1));

    // smallest-ideal property and quotient isoclinism, per ideal
    for (name, alg) in &reps {
        let mc = alg.m_commutator();
        for ideal in alg.ideals() {
            let q = alg.quotient(&ideal).unwrap();
            assert_eq!(
                q.alg.is_abelian_trivial(),
                mc.is_subset_of(&ideal),
                "smallest-ideal property fails on {name}"
            );
            assert!(
                quotient_isoclinism_check(alg, &ideal).unwrap(),
                "quotient isoclinism fails on {name}"
            );
        }
    }
    println!("  smallest-ideal + quotient isoclinism: done {:?}", start.elapsed());

    // trivial-class characterization, and G ~ G × G/ᴹ[G,G]
    for (name, alg) in &reps {
        let trivial_class = are_isoclinic(alg, &one).is_some();
        assert_eq!(
            trivial_class,
            alg.m_commutator().card() == 1,
            "trivial-class criterion fails on {name}"
        );
        let q = alg.quotient(&alg.m_commutator()).unwrap();
        if alg.order() * q.alg.order() <= 64 {
            let prod = alg.direct_product(&q.alg).alg;
            assert!(
                are_isoclinic(alg, &prod).is_some(),
                "G ~ G x G/M fails on {name}"
            );
        }
    }
    println!("  trivial class + abelianized product: done {:?}", start.elapsed());

    // squaring preserves and reflects isoclinism on the small part
    let small: Vec<&(String, MlAlgebra)> = reps.iter().filter(|(_, a)| a.order() <= 6).collect();
    for (i, (gn, g)) in small.iter().enumerate() {
        for (hn, h) in small.iter().skip(i) {
            let plain = are_isoclinic(g, h).is_some();
            let squared = are_isoclinic(
                &g.direct_product(g).alg,
                &h.direct_product(h).alg,
            )
            .is_some();
            assert_eq!(plain, squared, "squaring disagrees on ({gn}, {hn})");
        }
    }
    println!("  squared pairs: done {:?}", start.elapsed());

    // subalgebra center expansion on every subalgebra
    for (name, alg) in &reps {
        for s in alg.subalgebras() {
            assert!(
                subalgebra_center_expansion_check(alg, &s).unwrap(),
                "center expansion fails on {name}, subalgebra {:?}",
                s.to_vec()
            );
        }
    }
    println!("  center expansion: done {:?}", start.elapsed());

    // kernel/image criterion against the explicit construction, order ≤ 6
    for (gn, g) in &small {
        for (hn, h) in &small {
            for alpha in enumerate_homomorphisms(g, h) {
                let map: Vec<usize> = alpha.iter().map(|&x| x as usize).collect();
                let literal = homomorphism_induces_isoclinism(&map, g, h).unwrap();
                let constructed = corollary_pair_valid(&map, g, h);
                assert_eq!(
                    literal, constructed,
                    "criterion/construction disagree for a hom {gn} -> {hn}"
                );
                if literal {
                    assert!(
                        are_isoclinic(g, h).is_some(),
                        "criterion holds but {gn} !~ {hn}"
                    );
                }
            }
        }
    }
    println!("  kernel/image criterion: done {:?}", start.elapsed());

    // partition the pooled catalog; stems and centers per class
    let algs: Vec<MlAlgebra> = reps.iter().map(|(_, a)| a.clone()).collect();
    let classes = partition_by_isoclinism(&algs);
    println!("  {} isoclinism classes", classes.len());
    for class in &classes {
        let members: Vec<MlAlgebra> = class.iter().map(|&i| algs[i].clone()).collect();
        // accepted pairs within the class satisfy the coset identities
        for m in &members[1..] {
            let pair = are_isoclinic(&members[0], m).expect("class members are isoclinic");
            assert!(
                lemma_2_identities(&pair, &members[0], m),
                "coset identities fail inside a class"
            );
        }
        find_stem_in_class(&members).expect("stem theorem fails on a catalog class");
        let stems: Vec<&MlAlgebra> = members.iter().filter(|a| is_stem(a)).collect();
        for s1 in &stems {
            for s2 in &stems {
                assert!(
                    stems_have_isomorphic_centers(s1, s2).unwrap(),
                    "stem centers differ inside a class"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    verdict("4 (theorem suite on the order-≤8 catalog)", elapsed.as_secs_f64() < 600.0);
    assert!(elapsed.as_secs_f64() < 600.0, "took {elapsed:?}, budget 600 s");
}

/// Construction suite: pullback and descendant succeed with every internal
/// assertion on every isoclinic pair drawn from the example fixtures and
/// their products with a trivial Z2. Budget: 120 s.
#[test]
fn criterion_5_construction_suite() {
    let start = Instant::now();
    let z2 = catalog::trivial_star(&catalog::cyclic(2));
    let mut fixtures: Vec<(String, MlAlgebra)> = vec![
        ("V4s".into(), catalog::v4_with_star()),
        ("A".into(), catalog::z2cubed_with_star()),
        ("Q8i".into(), catalog::q8_improper()),
    ];
    for (i, d4) in catalog::d4_star_completions().into_iter().enumerate() {
        fixtures.push((format!("D4c{i}"), d4));
    }
    let products: Vec<(String, MlAlgebra)> = fixtures
        .iter()
        .map(|(n, a)| (format!("{n}xZ2"), a.direct_product(&z2).alg))
        .collect();
    fixtures.extend(products);

    let mut pairs = 0;
    for (gn, g) in &fixtures {
        for (hn, h) in &fixtures {
            let Some(pair) = are_isoclinic(g, h) else {
                continue;
            };
            pairs += 1;
            isoclinism_pullback(g, h, &pair, 1024)
                .unwrap_or_else(|e| panic!("pullback failed on ({gn}, {hn}): {e}"));
            common_descendant(g, h, &pair, 1024)
                .unwrap_or_else(|e| panic!("descendant failed on ({gn}, {hn}): {e}"));
        }
    }
    println!("  {pairs} isoclinic ordered pairs, all constructions verified");
    let elapsed = start.elapsed();
    let ok = pairs >= 24 && elapsed.as_secs_f64() < 120.0;
    verdict("5 (pullback + descendant suite)", ok);
    assert!(pairs >= 24, "expected at least 24 isoclinic ordered pairs, found {pairs}");
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, budget 120 s");
}

/// Categorical checks: the Hom correspondence for every catalog source and
/// abelian-trivial target of order ≤ 4, and the naturality square on 100
/// seeded random tuples. Budget: 120 s.
#[test]
fn criterion_6_categorical_checks() {
    let start = Instant::now();
    let reps = pooled_catalog_le_8();
    let targets = abelian_trivial_targets(4);
    for (name, alg) in &reps {
        for (tn, t) in &targets {
            assert!(
                hom_correspondence_check(alg, t).unwrap(),
                "Hom correspondence fails for ({name}, {tn})"
            );
        }
    }
    println!("  Hom correspondence: {} x {} checked", reps.len(), targets.len());

    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6c_616b);
    let mut checked = 0;
    while checked < 100 {
        let (_, m) = &reps[rng.gen_range(0..reps.len())];
        let (_, mt) = &reps[rng.gen_range(0..reps.len())];
        let (_, a) = &targets[rng.gen_range(0..targets.len())];
        let (_, at) = &targets[rng.gen_range(0..targets.len())];
        let fs = enumerate_homomorphisms(mt, m);
        let gs = enumerate_homomorphisms(a, at);
        let f: Vec<usize> = fs[rng.gen_range(0..fs.len())].iter().map(|&x| x as usize).collect();
        let g: Vec<usize> = gs[rng.gen_range(0..gs.len())].iter().map(|&x| x as usize).collect();
        assert!(
            adjunction_naturality_check(m, mt, &f, a, at, &g).unwrap(),
            "naturality square fails"
        );
        checked += 1;
    }
    println!("  naturality square: {checked} seeded tuples checked");
    let elapsed = start.elapsed();
    verdict("6 (categorical checks)", elapsed.as_secs_f64() < 120.0);
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, budget 120 s");
}

/// Oracle equivalence: the propagating search and the naive full-table
/// enumeration agree on every library group of order ≤ 6, and cyclic groups
/// admit exactly one structure. Budget: 300 s.
#[test]
fn criterion_7_oracle_equivalence() {
    let start = Instant::now();
    for (name, group) in catalog::library_groups() {
        if group.order() > 6 {
            continue;
        }
        let fast = enumerate_star_structures(&group, 8, 1).unwrap();
        let fast_tables: Vec<Vec<u16>> = fast.iter().map(|a| a.flat_star().to_vec()).collect();
        let naive = NaiveGroup::new(group.mul_rows()).enumerate_stars();
        assert_eq!(fast_tables, naive, "oracle mismatch on {name}");
        println!("  {name}: {} structures, oracle agrees", naive.len());
    }
    for n in 1..=8 {
        let found = enumerate_star_structures(&catalog::cyclic(n), 8, 1).unwrap();
        assert_eq!(found.len(), 1, "C{n} must have exactly one structure");
    }
    let elapsed = start.elapsed();
    verdict("7 (oracle equivalence)", elapsed.as_secs_f64() < 300.0);
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}, budget 300 s");
}

/// Determinism: classify runs byte-identically across runs and worker
/// counts, both reports and catalogs.
#[test]
fn criterion_8_classify_determinism() {
    let tmp = std::env::temp_dir().join(format!("mlakit-acc8-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&tmp);
    let mut all_ok = true;
    for group in ["v4_group.json", "s3_group.json"] {
        let mut outputs = Vec::new();
        for (i, workers) in ["1", "1", "3"].iter().enumerate() {
            let dir = tmp.join(format!("{group}.{i}"));
            let out = mlakit_cmd()
                .args([
                    "classify",
                    fixture(group).to_str().unwrap(),
                    "--json",
                    "--out",
                    dir.to_str().unwrap(),
                ])
                .env("MLAKIT_WORKERS", workers)
                .output()
                .expect("binary runs");
            assert!(out.status.success());
            // gather the full catalog bytes
            let mut tree: Vec<(String, Vec<u8>)> = Vec::new();
            collect_files(&dir, &mut tree);
            tree.sort();
            // strip the --out path from the report before comparing
            outputs.push((out.stdout.clone(), tree));
        }
        all_ok &= outputs[0] == outputs[1] && outputs[1] == outputs[2];
    }
    let _ = std::fs::remove_dir_all(&tmp);
    verdict("8 (classify determinism)", all_ok);
    assert!(all_ok, "classify output differs across runs or worker counts");
}

fn collect_files(dir: &std::path::Path, out: &mut Vec<(String, Vec<u8>)>) {
    if let Ok(entries) = std::fs::read_dir(dir) {
        for e in entries.flatten() {
            let p = e.path();
            if p.is_dir() {
                collect_files(&p, out);
            } else {
                let rel = p
                    .strip_prefix(dir.parent().unwrap_or(dir))
                    .unwrap_or(&p)
                    .file_name()
                    .unwrap()
                    .to_string_lossy()
                    .to_string();
                out.push((rel, std::fs::read(&p).unwrap()));
            }
        }
    }
}
