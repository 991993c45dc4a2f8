use genstirling::stirlingperm::enumerate_sequences;
use genstirling::trees::{
    distinguished_set, forest_distinguished_set, forest_to_seq, leftmost_internal_set,
    perm_to_tree, seq_to_forest, tree_to_perm, ward_marked_row,
};
use genstirling::ward::ward_table;
use genstirling::Params;

#[test]
fn single_tree_roundtrip_and_shape() {
    for nu in 1..=3u32 {
        for t in 0..=2u32 {
            let p = Params::new(nu, 1, t as i64).unwrap();
            for n in 0..=4u32 {
                for seq in enumerate_sequences(&p, n).unwrap() {
                    let word = &seq.entries[0];
                    let tree = perm_to_tree(word, nu, t).unwrap();
                    assert!(tree.is_valid());
                    assert_eq!(&tree_to_perm(&tree), word);
                    assert_eq!(tree.size(), n as usize);

                    let n_us = n as usize;
                    let d = (nu + 1) as usize;
                    let slots = if t >= 1 {
                        d * n_us + t as usize + 1
                    } else {
                        d * n_us
                    };
                    assert_eq!(tree.edge_count(), slots);
                    assert_eq!(tree.external_count(), nu as usize * n_us + t as usize + 1);

                    let j = seq.ascent_count();
                    let dist = distinguished_set(&tree);
                    assert_eq!(dist.len(), n_us - j, "{word}");
                    let root_term = usize::from(t == 0 && n > 0);
                    assert_eq!(n_us - j, leftmost_internal_set(&tree).len() + root_term);
                }
            }
        }
    }
}

#[test]
fn forest_roundtrip_over_compositions() {
    for nu in 1..=3u32 {
        for tvec in [vec![1, 0], vec![0, 1], vec![2, 0, 1], vec![0, 0, 0]] {
            let p = Params::with_tvec(nu, tvec.clone()).unwrap();
            let nmax = if nu == 3 { 3 } else { 4 };
            for n in 0..=nmax {
                for seq in enumerate_sequences(&p, n).unwrap() {
                    let forest = seq_to_forest(&seq).unwrap();
                    assert!(forest.trees.iter().all(|t| t.is_valid()));
                    assert_eq!(forest_to_seq(&forest), seq);
                    assert_eq!(forest.label_partition(), seq.label_partition());
                    assert_eq!(
                        forest_distinguished_set(&forest).len(),
                        n as usize - seq.ascent_count()
                    );
                }
            }
        }
    }
}

#[test]
fn marked_forest_counts_do_not_depend_on_composition() {
    let w = ward_table(&Params::new(1, 3, 2).unwrap(), 3).unwrap();
    for tvec in [vec![2, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 2]] {
        let p = Params::with_tvec(1, tvec).unwrap();
        for n in 0..=3u32 {
            assert_eq!(ward_marked_row(&p, n).unwrap(), w.row(n as usize));
        }
    }
}
