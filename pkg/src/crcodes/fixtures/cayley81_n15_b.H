# q=3  {28;8} coset graph, second matrix
111111111111000
000011112220100
011200220110010
201001010010001
