fn main() {
    println!("polyenum");
}
