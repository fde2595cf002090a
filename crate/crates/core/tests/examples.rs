//! Worked examples: the published codes, their ingredients and the table
//! statistics. Certifications that take minutes are `#[ignore]`d; run them
//! with `cargo test --release -- --ignored`.

mod common;

use std::path::Path;

use plotkin_core::codes::{bch_code, cyclic_code, DistanceInfo, LinearCode};
use plotkin_core::distance::{low_weight_witness, min_distance_bz, Status};
use plotkin_core::galois::{Field, Poly};
use plotkin_core::recipe::{eval_recipe, eval_recipe_with, parse_recipe};
use plotkin_core::search::{plotkin_scan, stats, Class, Stats};
use plotkin_core::tables::{Bounds, BoundsTable};

use common::repo_root;

const G65: &str = "x^21+a*x^20+a*x^19+a*x^18+a^2*x^15+a^2*x^14+a^2*x^12+x^11+x^10+a^2*x^9+a^2*x^7+a^2*x^6+a*x^3+a*x^2+a*x+1";

fn recipe(file: &str) -> LinearCode {
    let dir = repo_root().join("recipes");
    let ast = parse_recipe(&std::fs::read_to_string(dir.join(file)).unwrap()).unwrap();
    eval_recipe(&ast, &dir).unwrap()
}

fn fixture() -> BoundsTable {
    BoundsTable::load(repo_root().join("fixtures/paper_sixteen.tbl")).unwrap()
}

#[test]
fn cyclic_65_44_over_gf4() {
    let f = Field::gf(4).unwrap();
    let g = Poly::parse(&f, G65).unwrap();
    assert_eq!(g.degree(), Some(21));
    assert!(g.divides(&Poly::x_n_minus_one(&f, 65)).unwrap());
    let c = cyclic_code(&f, 65, &g).unwrap();
    assert_eq!((c.n(), c.k()), (65, 44));
    let s = c.shorten(&[62, 63, 64, 65]).unwrap();
    assert_eq!((s.n(), s.k()), (61, 40));
}

#[test]
fn bch_63_5_over_gf4() {
    let f = Field::gf(4).unwrap();
    let c = bch_code(&f, 63, 5, 1).unwrap();
    assert_eq!((c.n(), c.k()), (63, 54));
    assert_eq!(c.distance(), DistanceInfo::Bounds { lo: 5, hi: 10 });
    let e = c.extend();
    assert_eq!((e.n(), e.k()), (64, 54));
    let s = e.shorten(&[62, 63, 64]).unwrap();
    assert_eq!((s.n(), s.k()), (61, 51));
}

#[test]
fn ingredient_recipes_have_their_parameters() {
    for entry in std::fs::read_dir(repo_root().join("recipes")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_stem().unwrap().to_str().unwrap().to_string();
        let Some(rest) = name.strip_prefix('i') else { continue };
        let parts: Vec<usize> = rest.split('_').map(|p| p.parse().unwrap()).collect();
        let c = recipe(path.file_name().unwrap().to_str().unwrap());
        assert_eq!(
            (c.field().order() as usize, c.n(), c.k()),
            (parts[0], parts[1], parts[2]),
            "{name}"
        );
    }
}

#[test]
fn headline_sums_propagate_their_distance() {
    let t = fixture();
    let dir = repo_root().join("recipes");
    for (file, n, k, d) in [("c126_95.rcp", 126, 95, 12), ("c124_78.rcp", 124, 78, 16), ("c122_91.rcp", 122, 91, 12)] {
        let ast = parse_recipe(&std::fs::read_to_string(dir.join(file)).unwrap()).unwrap();
        let e = eval_recipe_with(&ast, &dir, Some(&t)).unwrap();
        assert_eq!((e.code.n(), e.code.k()), (n, k));
        assert_eq!(e.code.distance().lower(), Some(d), "{file}");
        for op in ast.terminal().call.operands() {
            assert!(e.table_sourced.contains(&op.text), "{file}: {:?}", e.table_sourced);
        }
    }
}

#[test]
fn shortened_sums_keep_the_bound() {
    let t = fixture();
    let dir = repo_root().join("recipes");
    for (file, parent) in [("c127_96.rcp", 12), ("c125_94.rcp", 12), ("c123_77.rcp", 16), ("c105_64.rcp", 16)] {
        let ast = parse_recipe(&std::fs::read_to_string(dir.join(file)).unwrap()).unwrap();
        let e = eval_recipe_with(&ast, &dir, Some(&t)).unwrap();
        assert!(e.code.distance().lower() >= Some(parent), "{file}: {}", e.code.distance());
    }
}

#[test]
fn fixture_entries() {
    let t = fixture();
    assert_eq!(t.len(), 34);
    assert_eq!(t.query(4, 61, 51), Some(Bounds { d_low: 6, d_high: None }));
    assert_eq!(t.query(4, 61, 40), Some(Bounds { d_low: 12, d_high: None }));
    assert_eq!(t.query(3, 62, 32), Some(Bounds { d_low: 16, d_high: None }));
    for cell in [(126, 95), (128, 97), (127, 96)] {
        assert_eq!(t.query(4, cell.0, cell.1).unwrap().d_low, 11);
    }
    assert_eq!(t.query(4, 122, 91).unwrap().d_low, 12);
    assert_eq!(t.query(2, 7, 4), None);
}

#[test]
fn fixture_scan_finds_the_new_codes() {
    let t = fixture();
    let findings = plotkin_scan(&t, 4, None);
    let at = |n: usize, k1: usize, k2: usize| findings.iter().find(|f| (f.n, f.k1, f.k2) == (n, k1, k2)).unwrap();
    assert_eq!(at(63, 53, 42).class, Class::Improves);
    assert_eq!(at(64, 54, 43).class, Class::Improves);
    assert_eq!(at(61, 51, 40).class, Class::Matches);
    assert_eq!(at(63, 42, 53).plotkin_d, 6);
    assert_eq!(at(63, 42, 53).class, Class::Below);
    assert_eq!(at(61, 40, 40).class, Class::NoTableEntry);
}

#[test]
fn statistics_denominators() {
    let t = BoundsTable::new();
    let want = [(2, 16512), (3, 14762), (4, 16512), (5, 4290), (7, 2550), (8, 4290), (9, 4290)];
    for (q, total) in want {
        assert_eq!(stats(&t, q).total_even, total, "q = {q}");
    }
}

#[test]
fn percentages_round_half_up() {
    let cases = [(2u32, 16512u64, 2676u64, "16.21"), (3, 14762, 1681, "11.39"), (4, 16512, 1350, "8.18")];
    for (q, total_even, achievable, want) in cases {
        assert_eq!(Stats { q, total_even, achievable }.percent(), want);
    }
    assert_eq!(Stats { q: 5, total_even: 4290, achievable: 495 }.percent(), "11.54");
    assert_eq!(Stats { q: 7, total_even: 8, achievable: 1 }.percent(), "12.50");
}

#[test]
fn bz_certifies_61_51() {
    let c = recipe("i4_61_51.rcp");
    let r = min_distance_bz(&c, 1_000_000_000).unwrap();
    assert_eq!((r.status, r.upper), (Status::Exact, 6));
}

#[test]
fn witnesses_for_deep_ingredients() {
    for (file, target) in [("i4_61_40.rcp", 12), ("i3_62_32.rcp", 16), ("i4_64_43.rcp", 12), ("i3_62_46.rcp", 8)] {
        let c = recipe(file);
        let r = low_weight_witness(&c, target, 10_000_000, 1).unwrap();
        assert_eq!(r.upper, target, "{file}: {r}");
        assert!(c.contains(&r.witness.unwrap().symbols).unwrap());
    }
}

#[test]
#[ignore = "minutes of BZ enumeration"]
fn bz_certifies_deep_ingredients() {
    for (file, d, budget) in [
        ("i4_54_27.rcp", 16, 3_000_000_000),
        ("i3_63_47.rcp", 8, 10_000_000_000),
        ("i4_54_40.rcp", 8, 30_000_000_000),
    ] {
        let r = min_distance_bz(&recipe(file), budget).unwrap();
        assert_eq!((r.status, r.upper), (Status::Exact, d), "{file}");
    }
}

#[test]
#[ignore = "minutes of BZ enumeration"]
fn bz_certifies_double_circulant() {
    let ast = parse_recipe("m = load(\"matrices/t3_64_32.mat\")").unwrap();
    let m = eval_recipe(&ast, &repo_root().join("recipes")).unwrap();
    let r = min_distance_bz(&m, 10_000_000_000).unwrap();
    assert_eq!((r.status, r.upper), (Status::Exact, 18));
    assert!(m.dual().same_code(&m));
}

#[test]
fn recipes_evaluate_from_any_directory() {
    let dir = repo_root().join("recipes");
    let text = std::fs::read_to_string(dir.join("c124_78.rcp")).unwrap();
    let ast = parse_recipe(&text).unwrap();
    assert!(eval_recipe(&ast, Path::new("/nonexistent")).is_err());
    assert_eq!(eval_recipe(&ast, &dir).unwrap().k(), 78);
}
