//! The exceptional-series rows and every dimension check they support.

use legendrian_cycles::report::series_table;

fn main() {
    print!("{}", series_table());
}
