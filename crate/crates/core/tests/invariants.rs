use proptest::prelude::*;

use bierlab::bier::bier_sphere_brute_force;
use bierlab::cubical::{z_complex, z_complex_by_predicate};
use bierlab::faces::is_dehn_sommerville;
use bierlab::homology::homology_sphere_check;
use bierlab::isomorphism::canonical_form;
use bierlab::multicomplex::box_points;
use bierlab::murai::murai_sphere;
use bierlab::tor::{hochster_betti, koszul_betti_oracle};
use bierlab::{alexander_dual, are_isomorphic, bier_sphere, Complex, FieldTag, Multicomplex, VertexSet};

/// Complexes on `[m]`, `1 ≤ m ≤ max_m`, generated by up to six random subsets.
fn complex(max_m: usize) -> impl Strategy<Value = Complex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(0u64..(1 << m), 0..6)
            .prop_map(move |masks| Complex::new(m, masks.into_iter().map(VertexSet::from_bits).collect()).unwrap())
    })
}

fn proper(max_m: usize) -> impl Strategy<Value = Complex> {
    complex(max_m).prop_filter("dual undefined for the simplex", |k| !k.is_full_simplex())
}

fn permutation(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=m).collect::<Vec<_>>()).prop_shuffle()
}

fn multicomplex() -> impl Strategy<Value = Multicomplex> {
    prop::collection::vec(1usize..=2, 1..=3)
        .prop_filter("at most five variables in total", |c| c.iter().sum::<usize>() <= 5)
        .prop_flat_map(|c| {
            let points = box_points(&c);
            let n = points.len();
            prop::collection::vec(0..n, 1..4).prop_map(move |idx| {
                Multicomplex::new(c.clone(), idx.into_iter().map(|i| points[i].clone()).collect()).unwrap()
            })
        })
        .prop_filter("proper", |mc| !mc.is_full())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn facets_form_an_antichain(k in complex(6)) {
        let f = k.facets();
        for (i, a) in f.iter().enumerate() {
            for b in &f[i + 1..] {
                prop_assert!(!a.is_subset(*b) && !b.is_subset(*a));
            }
        }
        prop_assert!(f.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn links_of_pure_complexes_have_complementary_dimension(k in complex(6)) {
        for s in k.faces() {
            let link = k.link(s).unwrap();
            prop_assert!(link.dim() <= k.dim() - s.len() as isize);
            if k.is_pure() {
                prop_assert_eq!(link.dim(), k.dim() - s.len() as isize);
            }
        }
    }

    #[test]
    fn deleting_the_apex_recovers_the_base(k in complex(6)) {
        let cone = k.cone();
        prop_assert_eq!(cone.deletion(k.m() + 1).unwrap().complex, k.clone());
        let link = cone.link(VertexSet::singleton(k.m() + 1)).unwrap();
        prop_assert_eq!(link.facets(), k.facets());
    }

    #[test]
    fn joins_of_flag_complexes_are_flag(k in complex(4), l in complex(4)) {
        prop_assert_eq!(k.join(&l).is_flag(), k.is_flag() && l.is_flag());
    }

    #[test]
    fn relabelings_are_isomorphic((k, perm) in complex(6).prop_flat_map(|k| { let m = k.m(); (Just(k), permutation(m)) })) {
        let l = k.relabel(&perm, k.m()).unwrap();
        let iso = are_isomorphic(&k, &l);
        prop_assert!(iso.is_some());
        prop_assert!(iso.unwrap().is_isomorphism(&k, &l));
        prop_assert_eq!(canonical_form(&k), canonical_form(&l));
    }

    #[test]
    fn duality_is_an_involution(k in proper(7)) {
        let dual = alexander_dual(&k).unwrap();
        prop_assert_eq!(alexander_dual(&dual).unwrap(), k.clone());
        // σ ∈ K∨ ⇔ [m]∖σ ∉ K
        for s in VertexSet::full(k.m()).subsets() {
            prop_assert_eq!(dual.has_face(s), !k.has_face(s.complement(k.m())));
        }
    }

    #[test]
    fn facet_rule_matches_the_deleted_join(k in proper(6)) {
        let sphere = bier_sphere(&k).unwrap();
        prop_assert_eq!(&sphere, &bier_sphere_brute_force(&k).unwrap());
        prop_assert!(sphere.is_pure());
        prop_assert_eq!(sphere.dim(), k.m() as isize - 2);
        prop_assert!(is_dehn_sommerville(&sphere));
    }

    #[test]
    fn bier_spheres_are_homology_spheres(k in proper(5)) {
        let sphere = bier_sphere(&k).unwrap();
        prop_assert!(homology_sphere_check(&sphere, k.m() - 1));
    }

    #[test]
    fn relabeled_bier_spheres_are_isomorphic((k, perm) in proper(5).prop_flat_map(|k| { let m = k.m(); (Just(k), permutation(m)) })) {
        let l = k.relabel(&perm, k.m()).unwrap();
        prop_assert!(are_isomorphic(&bier_sphere(&k).unwrap(), &bier_sphere(&l).unwrap()).is_some());
    }

    #[test]
    fn hochster_matches_koszul(k in complex(6)) {
        for f in [FieldTag::RATIONALS, FieldTag::GF2] {
            prop_assert_eq!(hochster_betti(&k, f).unwrap().table, koszul_betti_oracle(&k, f).unwrap().table);
        }
    }

    #[test]
    fn murai_spheres_have_the_right_dimension(mc in multicomplex()) {
        let s = murai_sphere(&mc).unwrap();
        prop_assert_eq!(s.m(), mc.m() + mc.total());
        prop_assert!(s.facets().iter().all(|f| f.len() + 1 == mc.total()));
        prop_assert!(homology_sphere_check(&s, mc.total() - 1));
        let dual = mc.c_dual().unwrap();
        prop_assert_eq!(dual.c_dual().unwrap(), mc.clone());
        prop_assert!(are_isomorphic(&s, &murai_sphere(&dual).unwrap()).is_some());
    }

    #[test]
    fn cell_predicate_matches_triples(k in proper(4)) {
        prop_assert_eq!(z_complex(&k).unwrap(), z_complex_by_predicate(&k).unwrap());
    }
}
