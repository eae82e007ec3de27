# q=3  SRG(81,24,9,6) H2
111111111000
000111120100
001011210010
120101100001
