//! The full reproduction report as aligned text.

use legendrian_cycles::report::{emit, run_all, Format};

fn main() -> legendrian_cycles::Result<()> {
    let report = run_all(1009, 0)?;
    print!("{}", emit(&report, Format::Text));
    Ok(())
}
