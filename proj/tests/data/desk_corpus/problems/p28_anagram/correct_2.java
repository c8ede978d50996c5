import java.util.*;

public class Main {
    static int[] counts(String w) {
        int[] table = new int[26];
        for (int i = 0; i < w.length(); i++) table[w.charAt(i) - 'a']++;
        return table;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        String a = in.next();
        String b = in.next();
        if (Arrays.equals(counts(a), counts(b))) {
            System.out.println("YES");
        } else {
            System.out.println("NO");
        }
    }
}
