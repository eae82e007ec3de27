# q=3  {35;10} and {25;20} coset graph
0000111111110011000
1111000011110010100
0012001200121100010
1200120012001200001
