mod common;

use nilform::algebra::classify;
use nilform::catalog;
use nilform::cohomology::{self, check_ddbar_lemma};
use nilform::formality::formality_verdicts;

#[test]
fn expected_values_regenerate_exactly() {
    for e in catalog::entries() {
        let (g, cs) = (e.algebra(), e.complex_structure());
        let x = &e.expected;
        assert_eq!(cohomology::betti_numbers(&g).unwrap(), x.betti, "{}", e.name);
        let t = cohomology::hodge_numbers(&g, &cs).unwrap();
        let m = cs.complex_dim();
        let hodge: Vec<Vec<usize>> = (0..=m).map(|p| (0..=m).map(|q| t.hodge(p, q).unwrap()).collect()).collect();
        assert_eq!(hodge, x.hodge, "{}", e.name);
        let c = classify(&g, &cs).unwrap();
        assert_eq!(
            (c.abelian_cs, c.bi_invariant, c.nilpotency_class),
            (x.abelian_cs, x.bi_invariant, x.nilpotency_class),
            "{}",
            e.name
        );
        assert_eq!(check_ddbar_lemma(&g, &cs).unwrap().holds, x.ddbar_lemma, "{}", e.name);
        let v = formality_verdicts(&g, &cs).unwrap();
        assert_eq!(v.derham_formal.formal, x.verdicts.derham_formal, "{}", e.name);
        assert_eq!(v.dolbeault_formal.formal, x.verdicts.dolbeault_formal, "{}", e.name);
        assert_eq!(v.zero_star_formal.formal, x.verdicts.zero_star_formal, "{}", e.name);
    }
}

#[test]
fn expected_values_agree_with_the_oracles() {
    for e in catalog::entries() {
        let sc = e.algebra().constants().clone();
        assert_eq!(common::betti_oracle(&sc), e.expected.betti, "{}", e.name);
        assert_eq!(common::hodge_oracle(&sc), e.expected.hodge, "{}", e.name);
    }
}
