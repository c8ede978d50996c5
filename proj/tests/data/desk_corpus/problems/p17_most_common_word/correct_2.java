import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        String[] words = in.nextLine().trim().split(" +");
        Arrays.sort(words);
        String bestWord = words[0];
        int best = 0;
        int i = 0;
        while (i < words.length) {
            int j = i;
            while (j < words.length && words[j].equals(words[i])) j++;
            if (j - i > best) {
                best = j - i;
                bestWord = words[i];
            }
            i = j;
        }
        System.out.println(bestWord + " " + best);
    }
}
