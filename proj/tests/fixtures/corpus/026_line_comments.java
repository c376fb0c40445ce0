// file header comment
class Commented { // trailing
    // before field
    int a; // after field
    void m() {
        // inside body
        a = 1; // after statement
    }
    // end of class
}
// trailing file comment
