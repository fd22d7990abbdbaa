//! The bounded Hodge-lift search against the published classifications.

use counting::{hodge_candidates, CountingContext};
use finqform::FiniteIsometry;
use lattice_core::lattice_from_symbol;

fn ctx(symbol: &str) -> CountingContext {
    CountingContext::new(lattice_from_symbol(symbol).unwrap()).unwrap()
}

fn class_index(ctx: &CountingContext, id: u32) -> usize {
    ctx.group
        .conjugacy_classes()
        .iter()
        .position(|c| c.members.contains(&id))
        .unwrap()
}

fn id_of_rows(ctx: &CountingContext, rows: &[&[i64]]) -> u32 {
    let moduli = ctx.group.form.inv.clone();
    let iso = FiniteIsometry::new(moduli, rows.iter().map(|r| r.to_vec()).collect());
    ctx.group.id_of(&iso).expect("matrix not in O(T#)")
}

#[test]
fn oguiso_hodge_orders_and_classes() {
    let ctx = ctx("U(2)+U(2)");
    let cands = hodge_candidates(&ctx, 10, 2).unwrap();
    let orders: Vec<u32> = cands.iter().map(|c| c.order).collect();
    assert_eq!(orders, vec![1, 2, 3, 6], "admissible orders");
    for c in &cands {
        assert_eq!(c.class_reps.len(), 1, "one class at order {}", c.order);
    }
    let h2 = id_of_rows(&ctx, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let h3 = id_of_rows(&ctx, &[&[0, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 0]]);
    let h6 = id_of_rows(&ctx, &[&[0, 0, 0, 1], &[1, 1, 1, 1], &[0, 1, 0, 1], &[1, 0, 0, 1]]);
    assert_eq!(class_index(&ctx, cands[1].class_reps[0]), class_index(&ctx, h2));
    assert_eq!(class_index(&ctx, cands[2].class_reps[0]), class_index(&ctx, h3));
    assert_eq!(class_index(&ctx, cands[3].class_reps[0]), class_index(&ctx, h6));
}

#[test]
fn kloosterman_hodge_orders_and_classes() {
    let ctx = ctx("U(2)+U(2)+[-2]+[-2]");
    let cands = hodge_candidates(&ctx, 10, 2).unwrap();
    let orders: Vec<u32> = cands.iter().map(|c| c.order).collect();
    assert_eq!(orders, vec![1, 2, 3], "admissible orders");
    for c in &cands {
        assert_eq!(c.class_reps.len(), 1, "one class at order {}", c.order);
    }
    let h2 = id_of_rows(
        &ctx,
        &[
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 1, 1, 1, 1],
            &[1, 1, 0, 0, 1, 1],
            &[1, 0, 0, 0, 0, 0],
            &[1, 0, 0, 1, 0, 1],
            &[1, 0, 0, 1, 1, 0],
        ],
    );
    let h3 = id_of_rows(
        &ctx,
        &[
            &[0, 0, 1, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ],
    );
    assert_eq!(class_index(&ctx, cands[1].class_reps[0]), class_index(&ctx, h2));
    assert_eq!(class_index(&ctx, cands[2].class_reps[0]), class_index(&ctx, h3));
}

#[test]
fn barth_peters_hodge_trivial() {
    // |O(T#)| = 2, but every integral Hodge isometry acts trivially on the
    // discriminant, so the only admissible order is 1.
    let ctx = ctx("U+U(2)");
    assert_eq!(ctx.group.order(), 2);
    let cands = hodge_candidates(&ctx, 10, 2).unwrap();
    let orders: Vec<u32> = cands.iter().map(|c| c.order).collect();
    assert_eq!(orders, vec![1]);
}

#[test]
fn odd_rank_forces_trivial_hodge_image() {
    for symbol in ["U(2)+U(2)+[-4]", "U+[12]"] {
        let ctx = ctx(symbol);
        let cands = hodge_candidates(&ctx, 10, 2).unwrap();
        let orders: Vec<u32> = cands.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1], "odd rank admits only order 1 for {symbol}");
    }
}
