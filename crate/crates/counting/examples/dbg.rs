use counting::CountingContext;
use lattice_core::lattice_from_symbol;

fn main() {
    let t = lattice_from_symbol("U(2)+U(2)").unwrap();
    let ctx = CountingContext::new(t).unwrap();
    let g = &ctx.group;
    let classes = g.conjugacy_classes();
    let rep3 = classes[3].representative;
    let sq = g.mul(rep3, rep3);
    let cls_of = |x: u32| classes.iter().position(|c| c.members.contains(&x)).unwrap();
    println!("class of rep3^2: {}", cls_of(sq));
    let s3 = g.subgroup_generated(&[rep3]).unwrap();
    let rep8 = classes[8].representative;
    let s8 = g.subgroup_generated(&[rep8]).unwrap();
    println!("subgroups conjugate: {:?}", g.is_conjugate_subgroup(&s3, &s8).is_some());
}
