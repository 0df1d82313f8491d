//! Why the candidate group is only an over-approximation.
//!
//! The product of the block symmetric groups always *contains* the
//! decomposition group, but the reverse inclusion can fail: here the two
//! points (0,1,5) and (1,0,6) give both x1 and x2 the coordinate set
//! {0,1}, so the block polynomial is swap-invariant; yet swapping x1 and
//! x2 maps (0,1,5) to (1,0,5), which is not a zero. The definitional
//! membership check catches this.
//!
//! Run with `cargo run --example candidate_gap`.

use decgroup::*;
use decgroup::rational::rat;

fn main() {
    let points = vec![
        vec![rat(0), rat(1), rat(5)],
        vec![rat(1), rat(0), rat(6)],
    ];

    let direct = dec_from_points(&points).expect("direct method");
    println!("partition: {}", direct.partition);
    println!("candidate (block-preserving) order: {}", direct.candidate_group.order());
    println!("confirmed dec order: {}", direct.dec_group.order());

    // same story through the quotient-ring pipeline
    let order = MonomialOrder::degrevlex();
    let gb = ideal_of_points(&points, &order).expect("vanishing ideal");
    let result = dec_group_from_basis(&gb, &DecOptions::default()).expect("pipeline");
    println!("\npipeline block symmetric groups:");
    for (block, sym) in result.partition.blocks().iter().zip(&result.block_sym_groups) {
        let vars: Vec<String> = block.iter().map(|i| format!("x{}", i + 1)).collect();
        println!("  {{{}}}: order {}", vars.join(","), sym.order());
    }
    println!("candidate order: {}", result.candidate_group.order());
    println!("confirmed dec: {}", result.dec_group);

    // ground truth by exhausting all six permutations of the point set
    let s3 = PermGroup::symmetric(3).expect("S_3");
    let truth: Vec<String> = s3
        .elements()
        .iter()
        .filter(|sigma| dec_oracle_member(sigma, &gb).expect("oracle"))
        .map(|sigma| sigma.to_string())
        .collect();
    println!("exhaustive check over S_3 confirms: {{{}}}", truth.join(", "));
}
