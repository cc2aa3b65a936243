int spaghetti(int x) {
    int t = 0;
    if (x > 0) { t += 0; }
    if (x > 1) { t += 1; }
    if (x > 2) { t += 2; }
    if (x > 3) { t += 3; }
    if (x > 4) { t += 4; }
    if (x > 5) { t += 5; }
    if (x > 6) { t += 6; }
    if (x > 7) { t += 7; }
    if (x > 8) { t += 8; }
    if (x > 9) { t += 9; }
    if (x > 10) { t += 10; }
    if (x > 11) { t += 11; }
    if (x > 12) { t += 12; }
    if (x > 13) { t += 13; }
    if (x > 14) { t += 14; }
    if (x > 15) { t += 15; }
    if (x > 16) { t += 16; }
    if (x > 17) { t += 17; }
    if (x > 18) { t += 18; }
    if (x > 19) { t += 19; }
    if (x > 20) { t += 20; }
    if (x > 21) { t += 21; }
    if (x > 22) { t += 22; }
    if (x > 23) { t += 23; }
    if (x > 24) { t += 24; }
    if (x > 25) { t += 25; }
    if (x > 26) { t += 26; }
    if (x > 27) { t += 27; }
    if (x > 28) { t += 28; }
    if (x > 29) { t += 29; }
    if (x > 30) { t += 30; }
    if (x > 31) { t += 31; }
    if (x > 32) { t += 32; }
    if (x > 33) { t += 33; }
    if (x > 34) { t += 34; }
    if (x > 35) { t += 35; }
    if (x > 36) { t += 36; }
    if (x > 37) { t += 37; }
    if (x > 38) { t += 38; }
    return t;
}
