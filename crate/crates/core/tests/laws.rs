use nearsym::{apply, apply_sequence, catalog, polar, Chord, Genus, Transformation};
use proptest::prelude::*;

fn genus() -> impl Strategy<Value = Genus> {
    prop::sample::select(Genus::ALL.to_vec())
}

fn chord_and_sequence() -> impl Strategy<Value = (Chord, Vec<&'static Transformation>)> {
    genus().prop_flat_map(|g| {
        let chords = prop::sample::select(g.chords());
        let steps = prop::collection::vec(prop::sample::select(catalog(g).iter().collect::<Vec<_>>()), 0..8);
        (chords, steps)
    })
}

proptest! {
    #[test]
    fn reversed_sequence_undoes_sequence((c, seq) in chord_and_sequence()) {
        let there = apply_sequence(&c, &seq).unwrap();
        let back: Vec<_> = seq.iter().rev().copied().collect();
        prop_assert_eq!(apply_sequence(&there, &back).unwrap(), c);
    }

    #[test]
    fn parity_of_sequence_sets_modality((c, seq) in chord_and_sequence()) {
        let there = apply_sequence(&c, &seq).unwrap();
        prop_assert_eq!(there.modality == c.modality, seq.len() % 2 == 0);
    }

    #[test]
    fn transformations_commute_with_transposition((c, seq) in chord_and_sequence(), t in 0i32..12) {
        let moved = Chord::new(c.genus, c.root.transpose(t), c.modality);
        for step in seq {
            let a = apply(step, &c).unwrap();
            let b = apply(step, &moved).unwrap();
            prop_assert_eq!(b.root, a.root.transpose(t));
            prop_assert_eq!(b.modality, a.modality);
        }
    }

    #[test]
    fn poles_are_complements(c in genus().prop_flat_map(|g| prop::sample::select(g.chords()))) {
        let p = polar(&c);
        prop_assert!(p.pitch_classes().is_disjoint(c.pitch_classes()));
        prop_assert_eq!(polar(&p), c);
    }
}
