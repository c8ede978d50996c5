import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        String[] words = in.nextLine().trim().split(" ");
        String bestWord = words[0];
        int best = 1;
        int run = 1;
        for (int i = 1; i < words.length; i++) {
            run = words[i].equals(words[i - 1]) ? run + 1 : 1;
            if (run > best) {
                best = run;
                bestWord = words[i];
            }
        }
        System.out.println(bestWord + " " + best);
    }
}
