use antimagic::circulant::{circulant_labeling, translated_labeling, LabelingMatrixView};
use antimagic::cycle_transform::build_construction_matrix;
use antimagic::graph::CirculantSpec;

fn golden(name: &str) -> String {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn assert_same(rendered: &str, want: &str) {
    let a: Vec<&str> = rendered.lines().map(str::trim_end).collect();
    let b: Vec<&str> = want.lines().map(str::trim_end).collect();
    assert_eq!(a, b);
}

#[test]
fn f_on_gamma_1() {
    let gamma = translated_labeling(16, 1, 0).unwrap();
    let view = LabelingMatrixView::from_labels(&gamma.graph().unwrap(), &gamma.labels).unwrap();
    assert_same(&view.render(), &golden("m_f_gamma1.txt"));
}

#[test]
fn f1_on_gamma_3() {
    let gamma = translated_labeling(16, 3, 1).unwrap();
    let view = LabelingMatrixView::from_labels(&gamma.graph().unwrap(), &gamma.labels).unwrap();
    assert_same(&view.render(), &golden("m_f1_gamma3.txt"));
}

#[test]
fn g_on_c16() {
    for (steps, file) in [([1, 3], "m_g_c16_1_3.txt"), ([1, 7], "m_g_c16_1_7.txt")] {
        let spec = CirculantSpec::new(16, steps.to_vec()).unwrap();
        let (g, f) = circulant_labeling(&spec).unwrap();
        let view = antimagic::circulant::labeling_matrix_view(&g, &f).unwrap();
        assert_same(&view.render(), &golden(file));
    }
}

#[test]
fn gamma_views_add_up_to_g() {
    // M_g(C_16(1,3)) is the cellwise sum of M_f(Γ_1) and M_{f_1}(Γ_3).
    let view = |a, i| {
        let gamma = translated_labeling(16, a, i).unwrap();
        LabelingMatrixView::from_labels(&gamma.graph().unwrap(), &gamma.labels).unwrap()
    };
    let (v1, v3) = (view(1, 0), view(3, 1));
    let spec = CirculantSpec::new(16, vec![1, 3]).unwrap();
    let (g, f) = circulant_labeling(&spec).unwrap();
    let whole = antimagic::circulant::labeling_matrix_view(&g, &f).unwrap();
    for r in 0..16 {
        assert_eq!(whole.row_sums[r], v1.row_sums[r] + v3.row_sums[r]);
        for c in 0..16 {
            let merged = v1.cells[r][c].or(v3.cells[r][c]);
            assert_eq!(whole.cells[r][c], merged);
        }
    }
}

#[test]
fn n128_matrix_layout() {
    let m = build_construction_matrix(3, 2).unwrap();
    let text = m.render();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains("C_32(1,7,9,15)"));
    let last = lines.last().unwrap();
    assert!(last.trim_start().starts_with("Sum |"));
    assert_eq!(last.split_whitespace().filter(|t| *t == "516").count(), 16);
    let row_sums: Vec<&str> = lines
        .iter()
        .filter_map(|l| l.rsplit_once(" | ").map(|(_, s)| s.trim()))
        .filter(|s| s.parse::<usize>().is_ok())
        .collect();
    assert_eq!(row_sums.iter().filter(|s| **s == "456").count(), 1);
    assert_eq!(row_sums.iter().filter(|s| **s == "520").count(), 15);
}
