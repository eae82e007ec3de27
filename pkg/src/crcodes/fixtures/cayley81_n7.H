# q=3  {10;8}-CR code search target, 4x7
1000111
0100100
0010010
0001001
