//! Relabels a lattice and shows that its canonical form does not change.

use latgen::{automorphisms, canonical_form, canonical_key, canonical_labeling, Lattice};

fn main() {
    // the pentagon: 0 < 2 < 3 < 1 and 0 < 4 < 1
    let pentagon: Lattice = "5;0<2,0<4,2<3,3<1,4<1".parse().unwrap();
    let shuffled = pentagon.relabel(&[0, 1, 4, 2, 3]);

    println!("original   {pentagon}");
    println!("relabelled {shuffled}");
    println!("labelling  {:?}", canonical_labeling(&pentagon).perm);
    println!("canonical  {}", canonical_form(&pentagon));
    assert_eq!(canonical_key(&pentagon), canonical_key(&shuffled));

    let m3: Lattice = "5;0<2,0<3,0<4,2<1,3<1,4<1".parse().unwrap();
    let group = automorphisms(&m3).unwrap();
    println!("M3 has {} automorphisms:", group.order());
    for p in group.perms() {
        println!("  {p:?}");
    }
}
