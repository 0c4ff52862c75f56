// Straight-line code, redefinitions, calls, compound assignment.
public class Straight {
    void empty() {}

    int single(int args) {
        int x = args;
        int r = x;
        return r;
    }

    int redefine() {
        int a = 1;
        a = 2;
        int r = a;
        return r;
    }

    int compound(int n) {
        int i = n;
        i += 2;
        i -= n;
        i++;
        i--;
        return i;
    }

    void calls(int p, int q) {
        int t = max(p, q * 2);
        print(t, p);
        log();
    }

    int chained() {
        int a;
        int b;
        a = b = 3;
        return a + b;
    }

    int exprs(int x) {
        int y = -x;
        boolean z = !(x < y);
        int w = (x + y) * -(-y) % 7;
        y = y;
        return w / 2;
    }

    static void paramUnused(int x, boolean flag) {
        return;
    }
}
