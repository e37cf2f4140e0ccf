//! Prouhet's solution of the Tarry-Escott problem.

use digital_binomial::ptm::prouhet_partition;
use digital_binomial::Base;

fn main() -> digital_binomial::Result<()> {
    for (b, m) in [(2, 2), (3, 1), (3, 2)] {
        let partition = prouhet_partition(Base::new(b)?, m, 4096)?;
        println!("b={b}, M={m}");
        for (i, class) in partition.classes().iter().enumerate() {
            println!("  S_{i} = {class:?}");
        }
        for (e, sums) in partition.power_sums(m + 1).iter().enumerate() {
            let sums: Vec<String> = sums.iter().map(ToString::to_string).collect();
            println!("  sum of n^{e}: {}", sums.join(" "));
        }
    }
    Ok(())
}
