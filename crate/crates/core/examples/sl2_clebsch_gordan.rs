//! Decompose tensor products of simple sl2-modules and compare with the
//! Clebsch–Gordan rule.

use leibniz::repsl2::{clebsch_gordan, decompose, dual, simple_module, tensor};

fn main() -> anyhow::Result<()> {
    for m in 0..=4 {
        for n in 0..=m {
            let product = tensor(&simple_module(m), &simple_module(n));
            let found = decompose(&product)?;
            assert_eq!(found, clebsch_gordan(m, n));
            println!("V{m} ⊗ V{n} = {found}");
        }
    }
    let v3 = simple_module(3);
    println!("V3* = {}", decompose(&dual(&v3))?);
    Ok(())
}
