# q=3  {28;8} coset graph, first matrix
011111111111000
100001111220100
000110011020010
112012010120001
