mod support;

use antimagic::circulant::{c_labeling, circulant_labeling, translated_labeling};
use antimagic::cycle_transform::{case_for_order, case_plan, transform_cycle, CasePlanId};
use antimagic::graph::{build_cycle, merge_vertices, one_point_union, CirculantSpec, Graph, MergePlan};
use antimagic::io::Document;
use antimagic::labeling::{check_edge_deletion_lemma, delete_extreme_edge, EdgeLabeling};
use antimagic::union::{transform_union, union_3labeling, Directive, UnionSpec};
use proptest::prelude::*;
use support::*;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn circulant_strategy() -> impl Strategy<Value = CirculantSpec> {
    (2usize..=20).prop_flat_map(|n| {
        let m = 2 * n;
        let odd: Vec<usize> = (3..n).step_by(2).filter(|&a| gcd(a, m) == 1).collect();
        let len = odd.len().min(3);
        proptest::sample::subsequence(odd, 0..=len)
            .prop_map(move |extra| CirculantSpec::new(m, [vec![1], extra].concat()).unwrap())
    })
}

proptest! {
    #[test]
    fn c_labeling_sums(m in 3usize..400) {
        let (g, f) = c_labeling(m).unwrap();
        let s = sums(m, g.edges(), f.labels());
        prop_assert_eq!(s[0], m / 2 + 2);
        for v in 1..m {
            prop_assert_eq!(s[v], if v % 2 == 1 { m + 1 } else { m + 2 });
        }
    }

    #[test]
    fn translated_labels_in_their_interval(m in 3usize..60, i in 0usize..4, a in 1usize..30) {
        prop_assume!(gcd(a, m) == 1);
        let gamma = translated_labeling(m, a, i).unwrap();
        prop_assert!(gamma.labels.iter().all(|&l| l > i * m && l <= (i + 1) * m));
        let seen: std::collections::BTreeSet<usize> = gamma.edges.iter().map(|&(u, _)| u).collect();
        prop_assert_eq!(seen.len(), m);
    }

    #[test]
    fn circulant_blocks_use_intervals(spec in circulant_strategy()) {
        let (g, f) = circulant_labeling(&spec).unwrap();
        let m = spec.m();
        for (i, &a) in spec.steps().iter().enumerate() {
            for j in 0..m {
                let e = i * m + j;
                let (u, v) = g.edge(e);
                prop_assert_eq!((u, v), (j * a % m, (j + 1) * a % m));
                prop_assert!(f.label(e) > i * m && f.label(e) <= (i + 1) * m);
            }
        }
        let c = colors(g.vertex_count(), g.edges(), f.labels()).unwrap();
        prop_assert_eq!(c.len(), 3);
    }

    #[test]
    fn case_transform_sums_add_up(n in 8usize..120) {
        let Some((case, k)) = case_for_order(n) else { return Ok(()) };
        let plan = case_plan(CasePlanId::Case(case, k)).unwrap();
        let t = transform_cycle(n, &plan).unwrap();
        let (cycle, f) = c_labeling(n).unwrap();
        let before = sums(n, cycle.edges(), f.labels());
        let after = sums(t.graph.vertex_count(), t.graph.edges(), t.labeling.labels());
        for v in 0..t.graph.vertex_count() {
            let merged: usize = t.graph.provenance(v).iter().map(|&o| before[o]).sum();
            prop_assert_eq!(after[v], merged);
        }
        let total: usize = t.graph.degrees().iter().sum();
        prop_assert_eq!(total, 2 * n);
        prop_assert_eq!(colors(t.graph.vertex_count(), t.graph.edges(), t.labeling.labels()), Some(family_colors(n)));
    }

    #[test]
    fn identity_merge_changes_nothing(m in 3usize..40) {
        let g = build_cycle(m).unwrap();
        prop_assert_eq!(merge_vertices(&g, &MergePlan::identity(m)).unwrap(), g);
    }

    #[test]
    fn union_counts(orders in proptest::collection::vec(3usize..12, 1..5)) {
        let cycles: Vec<Graph> = orders.iter().map(|&a| build_cycle(a).unwrap()).collect();
        let u = one_point_union(&cycles, &vec![0; cycles.len()]).unwrap();
        let m: usize = orders.iter().sum();
        prop_assert_eq!(u.edge_count(), m);
        prop_assert_eq!(u.vertex_count(), m - orders.len() + 1);
        prop_assert_eq!(u.degree(0), 2 * orders.len());
    }

    #[test]
    fn union_transform_preserves_labels(orders in proptest::collection::vec(16usize..40, 2..4), keep in any::<u8>()) {
        let spec = UnionSpec::new(orders).unwrap();
        let u = union_3labeling(&spec).unwrap();
        let dirs: Vec<Directive> = spec
            .orders()
            .iter()
            .enumerate()
            .map(|(i, _)| if keep >> i & 1 == 1 { Directive::Keep } else { Directive::Case })
            .collect();
        let (h, f) = transform_union(&u, &dirs).unwrap();
        prop_assert_eq!(&f, &u.labeling);
        prop_assert_eq!(h.edge_count(), u.graph.edge_count());
        let before = sums(u.graph.vertex_count(), u.graph.edges(), u.labeling.labels());
        let after = sums(h.vertex_count(), h.edges(), f.labels());
        for v in 0..h.vertex_count() {
            let merged: usize = h.provenance(v).iter().map(|&o| before[o]).sum();
            prop_assert_eq!(after[v], merged);
        }
        prop_assert_eq!(h.provenance(0)[0], 0);
        // Kept cycles keep sums m and m + 1; merged pairs double them.
        let m = spec.size();
        let mut want = std::collections::BTreeSet::from([after[0]]);
        if dirs.contains(&Directive::Keep) {
            want.extend([m, m + 1]);
        }
        if dirs.contains(&Directive::Case) {
            want.extend([2 * m, 2 * m + 2]);
        }
        prop_assert_eq!(colors(h.vertex_count(), h.edges(), f.labels()), Some(want));
    }

    #[test]
    fn complement_is_involution(labels in Just((1..=12usize).collect::<Vec<_>>()).prop_shuffle()) {
        let f = EdgeLabeling::new(labels).unwrap();
        prop_assert_eq!(f.complement().complement(), f);
    }

    #[test]
    fn edge_deletion_matches_reference(m in 4usize..60) {
        let (g, f) = c_labeling(m).unwrap();
        let e = f.edge_with_label(1).unwrap();
        prop_assert!(check_edge_deletion_lemma(&g, &f, e).unwrap());
        let (h, hf) = delete_extreme_edge(&g, &f, 1).unwrap();
        let s = sums(h.vertex_count(), h.edges(), hf.labels());
        let old = sums(m, g.edges(), f.labels());
        for v in 0..m {
            prop_assert_eq!(s[v], old[v] - 2);
        }
    }

    #[test]
    fn document_round_trip(spec in circulant_strategy()) {
        let (g, f) = circulant_labeling(&spec).unwrap();
        let doc = Document::labeled(g, f);
        let back = Document::from_json(&doc.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, doc);
    }
}
