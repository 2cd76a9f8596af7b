fn main() {
    println!("meandrift");
}
