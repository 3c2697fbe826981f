use fibercone::algebra::{analyze, AnalyzeOptions};
use fibercone::drawing::gdim_with;
use fibercone::generate::{caterpillar, cycle, path, poset_graph};
use fibercone::hilbert::hilbert_function_with;
use fibercone::lattice::{build_lattice, gorenstein_test, order_isomorphic, poset_ideals};
use fibercone::poset::FinitePoset;
use fibercone::Exec;

#[test]
fn json_is_independent_of_policy() {
    for g in [cycle(8), path(7), caterpillar(3, 4, 5)] {
        let json = |exec| {
            let opts = AnalyzeOptions { kmax: 10, exec, ..AnalyzeOptions::default() };
            (
                serde_json::to_string(&analyze(&g, &opts).unwrap()).unwrap(),
                serde_json::to_string(&gdim_with(&g, exec).unwrap().report()).unwrap(),
                serde_json::to_string(&hilbert_function_with(&g, 10, 3, exec).unwrap()).unwrap(),
            )
        };
        assert_eq!(json(Exec::Sequential), json(Exec::Parallel));
    }
}

#[test]
fn analyze_json_fields() {
    let r = analyze(&cycle(6), &AnalyzeOptions { kmax: 10, ..AnalyzeOptions::default() }).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["wsc"], false);
    assert_eq!(v["dim_estimate"], 3);
    assert_eq!(v["multiplicity_estimate"], 3);
    assert_eq!(v["gdim"], 3);
    assert_eq!(v["depth_witness"][0], serde_json::json!([1, 0, 1, 0, 1, 0]));
    assert!(v["ara_upper_bounds"].as_array().unwrap().iter().any(|b| b["minimal"] == true));
}

#[test]
fn five_element_posets() {
    let posets = FinitePoset::all_labelled(5);
    assert_eq!(posets.len(), 4231);
    for p in posets.iter().step_by(7) {
        let l = build_lattice(&poset_graph(p)).unwrap();
        assert!(order_isomorphic(&l, &poset_ideals(p)));
        let lengths = p.maximal_chain_lengths();
        assert_eq!(gorenstein_test(p), lengths.iter().all(|&x| x == lengths[0]));
    }
}
